"""
Node timing table for the exec_info rows of a graph run.
"""

from typing import Dict, List, Union

TOTAL_ROW = "TOTAL RESULT"


def prettify_exec_info(
    complete_result: List[Dict], as_string: bool = True
) -> Union[str, List[Dict]]:
    """
    Formats the per-node timings of a run, with each node's share of the
    total wall-clock time.

    Args:
        complete_result (List[Dict]): `{node_name, exec_time}` rows, the
            `TOTAL RESULT` row last.
        as_string (bool, optional): return the rows unchanged when False.

    Returns:
        Union[str, List[Dict]]: the rendered table or the original rows.
    """
    if not as_string:
        return complete_result

    if not complete_result:
        return "Empty result"

    total = next(
        (row["exec_time"] for row in complete_result if row["node_name"] == TOTAL_ROW),
        sum(row["exec_time"] for row in complete_result),
    )
    rule = "-" * 48

    lines = ["Node Statistics:", rule, f"{'Node':<28} {'Time (s)':>9} {'Share':>8}", rule]
    for row in complete_result:
        if row["node_name"] == TOTAL_ROW:
            lines.append(rule)
        share = row["exec_time"] / total if total else 0.0
        lines.append(f"{row['node_name']:<28} {row['exec_time']:>9.3f} {share:>8.1%}")

    return "\n".join(lines)
