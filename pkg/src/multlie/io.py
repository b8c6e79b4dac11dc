"""JSON formats: group files, algebra bundles and ideal specs."""
from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Union

from . import builtins
from .algebra import (MultLieAlg, check_axioms, normalized_mla, star_closure)
from .group import FiniteGroup, center, normalized, validate_group
from .subset import Subset

PathLike = Union[str, os.PathLike]


def group_to_dict(G: FiniteGroup) -> dict:
    out = {"name": G.name, "order": G.order, "mul": G.mul.tolist()}
    if G.element_names is not None:
        out["elements"] = list(G.element_names)
    return out


def group_from_dict(d: dict) -> FiniteGroup:
    if "mul" not in d:
        raise ValueError("group object needs a 'mul' table")
    if "order" in d and d["order"] != len(d["mul"]):
        raise ValueError(f"'order' is {d['order']} but the table has {len(d['mul'])} rows")
    return validate_group(d["mul"], d.get("elements"), d.get("name", ""))


def algebra_to_dict(M: MultLieAlg) -> dict:
    out = {"name": M.name, "group": group_to_dict(M.group), "star": M.star.tolist()}
    if M.label is not None:
        out["provenance"] = M.label.to_dict()
    return out


def _read(path: PathLike) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def write_json(obj, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")


def resolve_group(ref, base: Path | None = None) -> FiniteGroup:
    """A group from an inline object, a builtin name or a path to a group file."""
    if isinstance(ref, dict):
        return group_from_dict(ref)
    if ref in builtins.GROUP_FACTORIES:
        return builtins.group(ref)
    p = Path(ref)
    if base is not None and not p.is_absolute():
        p = base / p
    return group_from_dict(_read(p))


def load_bundle_raw(ref: str):
    """``(group, star, name)`` from a builtin algebra name or a bundle path,
    with the identity moved to index 0. The star is not validated."""
    if ref in builtins.ALGEBRA_FACTORIES:
        M = builtins.algebra(ref)
        return M.group, M.star.tolist(), ref
    path = Path(ref)
    d = _read(path)
    G = resolve_group(d["group"], path.parent)
    star = d["star"]
    G2, perm = normalized(G)
    if G2 is not G:
        n = G.order
        back = [0] * n
        for old, new in enumerate(perm):
            back[new] = old
        star = [[perm[star[back[a]][back[b]]] for b in range(n)] for a in range(n)]
    return G2, star, d.get("name", path.stem)


def load_algebra(ref: str) -> MultLieAlg:
    G, star, name = load_bundle_raw(ref)
    if ref in builtins.ALGEBRA_FACTORIES:
        return builtins.algebra(ref)
    return normalized_mla(check_axioms(G, star, name=name))


def load_group(ref: str) -> FiniteGroup:
    if ref in builtins.GROUP_FACTORIES:
        return builtins.group(ref)
    return normalized(resolve_group(ref))[0]


def split_names(spec: str) -> list[str]:
    """Split on commas outside parentheses, so ``(1,a),(b,1)`` has two names."""
    out, depth, cur = [], 0, ""
    for ch in spec:
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


def parse_ideal(M: MultLieAlg, spec: str) -> Subset:
    """``all``, ``trivial``, ``center``, ``star-closure`` or element names."""
    G = M.group
    if spec == "all":
        return G.full()
    if spec == "trivial":
        return G.trivial()
    if spec == "center":
        return center(G)
    if spec == "star-closure":
        return star_closure(M)
    return G.subset(G.index_of(name) for name in split_names(spec))
