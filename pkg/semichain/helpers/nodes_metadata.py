"""
Nodes metadata for the semichain package.
"""

nodes_metadata = {
    "ParseFamilyNode": {
        "description": "Parses a family string such as `I:4` or `brandt:c2,3`.",
        "type": "node",
        "args": {"family": "The family string, see `family_help()`."},
        "returns": "Updated state with the FamilySpec under 'family_spec' key.",
    },
    "BuildTableNode": {
        "description": "Builds or loads the Cayley table of the semigroup.",
        "type": "node",
        "args": {
            "family_spec": "A parsed family.",
            "table_path": "Path of a table file, text or JSON.",
            "table_text": "The content of a table file.",
        },
        "returns": "Updated state with the CayleyTable under 'table' key.",
    },
    "FormulaLengthNode": {
        "description": "Evaluates the closed form for the length of a named family.",
        "type": "node",
        "args": {"family_spec": "A parsed family."},
        "returns": "Updated state with 'length' (None when no closed form applies) and 'method'.",
    },
    "DecomposeNode": {
        "description": """Computes the length from the principal factors of the table,
        using closed forms for null, group, Brandt and completely simple factors.""",
        "type": "node",
        "args": {"table": "The Cayley table."},
        "returns": "Updated state with 'length', 'method' and the decomposition 'trace'.",
    },
    "OracleNode": {
        "description": "Exhaustive search for the longest chain of (inverse) subsemigroups.",
        "type": "node",
        "args": {"table": "The Cayley table."},
        "returns": "Updated state with 'length', 'method' and the witness 'certificate'.",
    },
    "LengthReportNode": {
        "description": "Collects the outcome of the length pipeline.",
        "type": "node",
        "args": {"length": "The computed length."},
        "returns": "Updated state with the payload under 'result' key.",
    },
    "ClassifyNode": {
        "description": "Classifies the table and counts its Green's classes.",
        "type": "node",
        "args": {"table": "The Cayley table."},
        "returns": "Updated state with the payload under 'result' key.",
    },
    "LeagueSearchNode": {
        "description": "Largest content of a league of rank k on n points, or its lower bound.",
        "type": "node",
        "args": {"n": "Number of points.", "k": "Rank."},
        "returns": "Updated state with the search result under 'result' key.",
    },
    "ReproduceTableNode": {
        "description": "Recomputes a published table and compares it with print.",
        "type": "node",
        "args": {"table_id": "Table number, 1 to 5."},
        "returns": "Updated state with the TableReport under 'report' key.",
    },
    "GLSNode": {
        "description": "Chain length bounds for the semigroup of n x n matrices over GF(q).",
        "type": "node",
        "args": {"n": "Matrix size.", "q": "Field order."},
        "returns": "Updated state with the payload under 'result' key.",
    },
    "TransformationBoundsNode": {
        "description": "League and null subsemigroup bounds for T_n.",
        "type": "node",
        "args": {"n": "Number of points."},
        "returns": "Updated state with the payload under 'result' key.",
    },
    "LeagueCertificateNode": {
        "description": "Chain certificate in T_n built from the bound league, and its check.",
        "type": "node",
        "args": {"n": "Number of points.", "k": "Rank."},
        "returns": "Updated state with the payload under 'result' key.",
    },
    "ConditionalNode": {
        "description": "Decides which of two nodes runs next from a condition on the state.",
        "type": "conditional_node",
        "args": {"key_name": "The state key the default condition tests."},
        "returns": "The name of the next node.",
    },
}
