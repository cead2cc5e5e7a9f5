"""Python access to the Weber modular toolkit."""

import json

from ._core import (  # noqa: F401
    DomainError,
    WeberError,
    builtin,
    chain,
    generate,
    graph_json,
    group_orders,
    hecke_sieve,
    lines,
    qid_report,
    run_cli,
    serialize,
    split_violations,
    ss_count_formula,
    supersingular_j,
    verify,
)


def graph(p, line, ell):
    """Supersingular isogeny graph as a dict (nodes, edges, out_degree, ...)."""
    return json.loads(graph_json(p, line, ell))


def poly_dict(terms):
    """{(i, j): coefficient string} from a list of terms."""
    return {(i, j): c for i, j, c in terms}
