"""Text Gauss codes and JSON reports.

Grammar: a code is a sequence of tokens ``[OU][0-9]+[+-]``, optionally
separated by any mix of whitespace and commas.  Each label occurs exactly
twice, once with ``O`` and once with ``U``, with the same sign suffix.
"""

from __future__ import annotations

import re

from .diagram import GaussDiagram, relabeled
from .errors import GaussForgeError, LabelCountError, RoleError, SignMismatch, TokenSyntaxError

_TOKEN = re.compile(r"([OU])([0-9]+)([+-])")
_SEP = re.compile(r"[\s,]*")


def tokenize(text: str) -> list[tuple[str, int, int]]:
    tokens = []
    pos = _SEP.match(text).end()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or int(m.group(2)) == 0:
            bad = re.match(r"[^\s,]{1,8}", text[pos:])
            snippet = bad.group(0) if bad else text[pos:pos + 8]
            raise TokenSyntaxError(f"token {len(tokens) + 1}: cannot parse {snippet!r}", len(tokens) + 1)
        tokens.append((m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1))
        pos = _SEP.match(text, m.end()).end()
    return tokens


def parse(text: str) -> GaussDiagram:
    seen: dict[int, tuple[str, int, int]] = {}
    count: dict[int, int] = {}
    for idx, (role, lab, sign) in enumerate(tokenize(text), start=1):
        count[lab] = count.get(lab, 0) + 1
        if count[lab] > 2:
            raise LabelCountError(f"token {idx}: label {lab} occurs more than twice", idx)
        if lab in seen:
            prev_role, prev_sign, _ = seen[lab]
            if prev_role == role:
                raise RoleError(f"token {idx}: label {lab} has role {role} twice", idx)
            if prev_sign != sign:
                raise SignMismatch(f"token {idx}: sign of label {lab} disagrees with its first occurrence", idx)
        else:
            seen[lab] = (role, sign, idx)
    for lab, c in count.items():
        if c != 2:
            raise LabelCountError(f"token {seen[lab][2]}: label {lab} occurs only once", seen[lab][2])
    endpoints = [(lab, role) for role, lab, _ in tokenize(text)]
    return GaussDiagram(endpoints, {lab: s for lab, (_, s, _) in seen.items()})


def serialize(D: GaussDiagram) -> str:
    """Gauss code with labels renumbered by first occurrence."""
    return relabeled(D).code()


def report(D: GaussDiagram) -> dict:
    """Summary of every invariant the library computes for ``D``.

    Labels in ``gaussian_parities`` refer to the renumbered labels of
    ``code``.  Failures are re-raised with the owning module prefixed.
    """
    from . import invariants, parity, surface

    D = relabeled(D)
    try:
        data = surface.surface_data(D)
        group = parity.parity_group(D)
        gp = parity.gaussian_parity(D)
        return {
            "code": D.code(),
            "n": D.n,
            "genus": data.genus,
            "faces": data.F,
            "bridges": invariants.bridge_count(D),
            "gaussian_parities": {str(lab): gp[lab] for lab in sorted(gp)},
            "parity_group_dim": group.dim,
            "classical_diagram": data.genus == 0,
            "odd_writhe": invariants.odd_writhe(D),
            "f_polynomial": invariants.f_polynomial(D).to_json(),
        }
    except GaussForgeError as exc:
        raise type(exc)(f"[{exc.module}] {exc}") from exc
