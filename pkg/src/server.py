"""FastMCP server setup and tool definitions."""

import json
from typing import Any, Callable, Dict, Optional

from fastmcp import FastMCP

from .config.constants import JSON_INDENT, SERVER_NAME, SERVER_VERSION
from .config.settings import Settings
from .toolkit import SheafToolkit
from .utils.errors import CheckFailure, SheafToolkitError
from .utils.logging import get_logger, setup_logging
from .utils.validation import InputValidator

module_logger = get_logger(__name__)

TOOL_NAMES = [
    "mobius",
    "euler",
    "predicates",
    "check_condition_g",
    "decompose",
    "cech_cohomology",
    "nerve_cohomology",
    "compare_cech_nerve",
    "verify_homotopy",
    "marginal_report",
    "marginal_surjectivity",
    "brute_force_oracle",
    "self_test",
    "debug_env_vars",
]


class SheafMCPServer:
    """Sheaf cohomology toolkit exposed as MCP tools."""

    def __init__(self, settings: Optional[Settings] = None):
        """Initialize the server with settings from the environment."""
        self.settings = settings or Settings()
        setup_logging(self.settings.log_level)
        self.mcp = FastMCP(name=SERVER_NAME)
        self.toolkit = SheafToolkit(self.settings.field, self.settings.max_degree, self.settings.corpus_seed)

        self._register_tools()
        self._register_resources()

        module_logger.info("Sheaf MCP Server initialized successfully")

    def _call(self, what: str, pipeline: Callable[[], Dict[str, Any]]) -> str:
        """Run a pipeline and render its result, or an error string the client can read."""
        try:
            return json.dumps(pipeline(), indent=JSON_INDENT, sort_keys=True, ensure_ascii=False)
        except CheckFailure as e:
            module_logger.error(f"{what} check failed: {e.message}")
            return f"Error: check failed in {what}: {json.dumps(e.to_dict(), sort_keys=True, ensure_ascii=False)}"
        except SheafToolkitError as e:
            module_logger.error(f"{what} failed: {e.message}")
            return f"Error in {what}: {e.message}"

    @staticmethod
    def _doc(text: str, name: str = "document") -> Any:
        return InputValidator.parse_json(text, name)

    def _register_tools(self) -> None:
        """Register all MCP tools."""

        @self.mcp.tool()
        def mobius(document: str) -> str:
            """Möbius function table of a poset or hypergraph given as JSON text."""
            return self._call("mobius", lambda: self.toolkit.mobius(self._doc(document)))

        @self.mcp.tool()
        def euler(document: str) -> str:
            """Euler characteristic of a poset or hypergraph, computed three ways."""
            return self._call("euler", lambda: self.toolkit.euler(self._doc(document)))

        @self.mcp.tool()
        def predicates(document: str) -> str:
            """Structural predicates, connected components and final elements."""
            return self._call("predicates", lambda: self.toolkit.predicates(self._doc(document)))

        @self.mcp.tool()
        def check_condition_g(document: str) -> str:
            """Check the sum-intersection condition G of an injective presheaf."""
            return self._call("check_condition_g", lambda: self.toolkit.check_g(self._doc(document)))

        @self.mcp.tool()
        def decompose(document: str) -> str:
            """Interaction decomposition of an injective presheaf."""
            return self._call("decompose", lambda: self.toolkit.decompose(self._doc(document)))

        @self.mcp.tool()
        def cech_cohomology(
            document: str,
            mode: str = "alternating",
            cover: str = "canonical",
            subset: str = "",
            functor: str = "free_copresheaf",
        ) -> str:
            """
            Čech cohomology on a cover. `cover` is canonical, maximal or a JSON list of
            element lists; a comma-separated `subset` switches to relative cohomology.
            """
            def run():
                spec = cover if cover in ("canonical", "maximal") else self._doc(cover, "cover")
                labels = [s.strip() for s in subset.split(",") if s.strip()] or None
                return self.toolkit.cech(self._doc(document), mode, spec, labels, functor_kind=functor)

            return self._call("cech_cohomology", run)

        @self.mcp.tool()
        def nerve_cohomology(document: str, mode: str = "nondegenerate") -> str:
            """Cohomology of the category-nerve complex of a functor."""
            return self._call("nerve_cohomology", lambda: self.toolkit.nerve(self._doc(document), mode))

        @self.mcp.tool()
        def compare_cech_nerve(document: str, mode: str = "alternating") -> str:
            """Compare Čech and nerve cohomology of an injective presheaf."""
            return self._call("compare_cech_nerve", lambda: self.toolkit.compare(self._doc(document), mode))

        @self.mcp.tool()
        def verify_homotopy(document: str, cover: str = "maximal") -> str:
            """Verify the homotopy identities between covering and category nerves."""
            def run():
                spec = cover if cover in ("canonical", "maximal") else self._doc(cover, "cover")
                return self.toolkit.verify_homotopy(self._doc(document), spec)

            return self._call("verify_homotopy", run)

        @self.mcp.tool()
        def marginal_report(document: str, with_oracle: bool = False) -> str:
            """Pseudomarginal dimension, index formula and Euler characteristics of a hypergraph."""
            return self._call("marginal_report", lambda: self.toolkit.marginal(self._doc(document), with_oracle))

        @self.mcp.tool()
        def marginal_surjectivity(small: str, large: str, vertex_map: str = "") -> str:
            """Check that pseudomarginals restrict surjectively along an inclusion."""
            def run():
                vmap = self._doc(vertex_map, "vertex_map") if vertex_map else None
                return self.toolkit.surjectivity(self._doc(small, "small"), self._doc(large, "large"), vmap)

            return self._call("marginal_surjectivity", run)

        @self.mcp.tool()
        def brute_force_oracle(document: str) -> str:
            """Brute-force H^0 of the free and restricted sheaves against the section pipeline."""
            return self._call("brute_force_oracle", lambda: self.toolkit.oracle(self._doc(document)))

        @self.mcp.tool()
        def self_test(module: str = "all") -> str:
            """Run the invariant suites on the built-in corpus."""
            return self._call("self_test", lambda: self.toolkit.self_test(module))

        @self.mcp.tool()
        def debug_env_vars() -> str:
            """Debug environment variables for the toolkit configuration."""
            try:
                return json.dumps(self.settings.get_debug_info(), indent=JSON_INDENT)
            except SheafToolkitError as e:
                module_logger.error(f"Environment debug failed: {e.message}")
                return f"Error debugging environment variables: {e.message}"

        module_logger.info("All MCP tools registered successfully")

    def _register_resources(self) -> None:
        """Register MCP resources."""

        @self.mcp.resource("data://toolkit_config")
        def get_toolkit_config() -> Dict[str, Any]:
            """Provides server configuration and defaults."""
            return {
                "server_name": SERVER_NAME,
                "version": SERVER_VERSION,
                "field": self.toolkit.field.label,
                "max_degree": self.toolkit.max_degree,
                "seed": self.toolkit.seed,
                "available_tools": TOOL_NAMES,
            }

        module_logger.info("MCP resources registered successfully")

    def run(self) -> None:
        """Run the MCP server."""
        module_logger.info("Starting Sheaf MCP Server")
        self.mcp.run()

    def get_mcp_instance(self) -> FastMCP:
        """Get the FastMCP instance for testing."""
        return self.mcp
