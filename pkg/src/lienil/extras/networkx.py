from __future__ import annotations

from itertools import product
from typing import Sequence

import networkx as nx

from lienil.core.algebra.fingerprint import fingerprint_many
from lienil.core.catalog.entries import get
from lienil.core.cohomology.extension import TwoCocycle, find_extension_to
from lienil.core.config import current_settings
from lienil.core.utils.batch import ComputeBatch, anysync


@anysync
async def extension_graph(names: Sequence[str], bound: int | None = None) -> nx.DiGraph:
    """Link catalog entries by central extensions found within a coefficient bound.

    Every edge ``base -> extension`` carries the witnessing ``cocycle``. Nodes carry their
    ``algebra`` and a ``subset`` attribute giving their layer, so the graph can be drawn
    with `networkx.multipartite_layout`.
    """
    entries = [get(n) for n in names]
    fingerprints = await fingerprint_many.a([e.algebra for e in entries])

    graph = nx.DiGraph()
    for entry in entries:
        graph.add_node(entry.name, algebra=entry.algebra, label=entry.description)

    pairs = [
        (base, (extension, fp))
        for base, (extension, fp) in product(entries, zip(entries, fingerprints))
        if extension.algebra.dim == base.algebra.dim + 1
    ]
    overrides = {} if bound is None else {"search_bound": bound}
    with current_settings(**overrides):
        # workers copy the context, so the bound travels with each search
        batch = ComputeBatch[TwoCocycle | None]()
        for base, (_, fp) in pairs:
            batch.add(find_extension_to, base.algebra, fp)
    found = await batch.gather()

    graph.add_edges_from(
        [
            (base.name, extension.name, {"cocycle": theta})
            for (base, (extension, _)), theta in zip(pairs, found)
            if theta is not None
        ]
    )

    for layer, nodes in enumerate(nx.topological_generations(graph)):
        # `multipartite_layout` reads the layer from a node attribute
        for node in nodes:
            graph.nodes[node]["subset"] = layer

    return graph
