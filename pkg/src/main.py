"""Main entry point for the Sheaf MCP Server."""

import asyncio
import json

from fastmcp import Client

from .server import SheafMCPServer
from .utils.logging import get_logger

logger = get_logger(__name__)

BOUNDARY_OF_TRIANGLE = {
    "vertices": ["1", "2", "3"],
    "faces": [["1"], ["2"], ["3"], ["1", "2"], ["1", "3"], ["2", "3"]],
    "cardinality": 2,
}


async def test_server_locally():
    """Exercise a few tools against the in-memory server."""
    print("\n--- Testing Sheaf MCP Server Locally ---")

    server = SheafMCPServer()
    client = Client(server.get_mcp_instance())

    async with client:
        config_data = await client.read_resource("data://toolkit_config")
        print(f"Toolkit config: {config_data}")

        document = json.dumps(BOUNDARY_OF_TRIANGLE)
        euler = await client.call_tool("euler", {"document": document})
        print(f"Euler characteristic of the boundary of a triangle: {euler}")

        report = await client.call_tool("marginal_report", {"document": document})
        print(f"Marginal report: {report}")

        print("\nAvailable tools:")
        for tool in await client.list_tools():
            print(f"- {tool.name}")


def main():
    """Main function to run the server."""
    try:
        server = SheafMCPServer()

        if __name__ == "__main__":
            asyncio.run(test_server_locally())

            print("\n--- Starting FastMCP Server via main ---")
            server.run()
        else:
            return server

    except Exception as e:
        logger.error(f"Failed to start server: {e}")
        raise


if __name__ == "__main__":
    main()
