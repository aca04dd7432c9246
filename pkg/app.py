"""
Server object for `fastmcp run app.py:mcp`.

The command-line tool lives in src/cli.py (`python -m src.cli`).
"""

import asyncio

from src.server import SheafMCPServer

_server = SheafMCPServer()
mcp = _server.get_mcp_instance()


async def test_server_locally():
    """Smoke run against the in-memory server."""
    from src.main import test_server_locally
    await test_server_locally()

if __name__ == "__main__":
    asyncio.run(test_server_locally())

    print("\n--- Starting FastMCP Server via __main__ ---")
    mcp.run()
