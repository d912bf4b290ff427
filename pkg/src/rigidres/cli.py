"""Command-line surface: file I/O, JSON schemas, and DOT diagram export.

File formats
------------
``.ideal``    text; generators separated by ``;`` or newlines, ``#`` starts
              a comment (see :func:`rigidres.monomials.parse_ideal`).
``.lattice``  JSON ``{n_atoms, supports, degrees?}``.  Supports are lists
              of 1-based atom indices (the library is 0-based internally);
              optional degrees are exponent vectors aligned with supports.
``.res``      JSON ``{modules, differentials}``.  Module entries carry a
              degree vector and a source element; differential entries are
              (row, col, scalar, monomial) with row/col indexing into the
              adjacent module arrays and scalars as decimal strings.
``.dot``      Graphviz text: the Hasse diagram, contributor nodes filled.

All JSON read or written here is validated against the schema files
shipped in ``rigidres/schemas/``.

Exit codes: 0 success, 1 input error (bad arguments, malformed or
unreadable files), 2 computed-but-negative (a verification failed, the
input is not rigid, no isomorphism / join-preserving map / deformation
was found).  Worker parallelism follows the RIGIDRES_WORKERS variable.
"""

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

import jsonschema

from .betti import (BettiTable, betti_numbers, betti_poset, interval_ranks,
                    rigidity_report)
from .deform import (lattice_betti_totals, search_rigid_deformation,
                     simplicial_rigid_deformation)
from .frames import (GradedFreeResolution, build_frame, homogenize, relabel,
                     scarf_complex, taylor_betti, verify_resolution)
from .homology import FieldSpec, SimplicialComplex
from .monomials import Monomial, parse_ideal
from .posets import (FiniteAtomicLattice, Poset, element_key, is_isomorphic,
                     join_preserving_map, lcm_lattice)


class InputError(ValueError):
    """Bad command line or unusable input file (exit code 1)."""


# --------------------------------------------------------------------------
# JSON schemas and (de)serialization

def load_schema(name):
    path = resources.files("rigidres").joinpath("schemas", f"{name}.schema.json")
    return json.loads(path.read_text())


def validate_payload(payload, schema_name):
    jsonschema.validate(payload, load_schema(schema_name))
    return payload


def family_to_json(P, n_atoms, degrees=None):
    """JSON payload for a family of atom supports, 1-based in files."""
    payload = {
        "n_atoms": n_atoms,
        "supports": [[i + 1 for i in sorted(e)] for e in P.elements],
    }
    if degrees is not None:
        payload["degrees"] = [list(degrees[e]) for e in P.elements]
    return validate_payload(payload, "lattice")


def family_from_json(payload):
    """Parse a support-family payload → (supports, n_atoms, degrees|None)."""
    validate_payload(payload, "lattice")
    n = payload["n_atoms"]
    supports = [frozenset(i - 1 for i in s) for s in payload["supports"]]
    if len(set(supports)) != len(supports):
        raise InputError("duplicate supports in lattice file")
    for s in supports:
        if s and max(s) >= n:
            raise InputError(f"atom index {max(s) + 1} out of range for "
                             f"{n} atoms")
    degrees = None
    if "degrees" in payload:
        if len(payload["degrees"]) != len(supports):
            raise InputError("degrees and supports differ in length")
        degrees = {s: Monomial(m)
                   for s, m in zip(supports, payload["degrees"])}
    return supports, n, degrees


def lattice_from_json(payload):
    supports, n, degrees = family_from_json(payload)
    return FiniteAtomicLattice(supports, n, degrees)


def resolution_to_json(res):
    """JSON payload for a graded resolution (round-trips with the loader)."""
    length = res.length
    modules, index = [], {}
    for pos in range(length + 1):
        rows = []
        for k, (key, deg) in enumerate(res.modules.get(pos, ())):
            index[(pos, key)] = k
            rows.append({"degree": list(deg),
                         "source_element": [i + 1 for i in sorted(key[0])]})
        modules.append(rows)
    differentials = []
    for pos in range(1, length + 1):
        entries = []
        for colkey, col in res.differentials.get(pos, {}).items():
            for rowkey, (c, mono) in col.items():
                entries.append({"row": index[(pos - 1, rowkey)],
                                "col": index[(pos, colkey)],
                                "scalar": str(c),
                                "monomial": list(mono)})
        entries.sort(key=lambda e: (e["col"], e["row"]))
        differentials.append(entries)
    payload = {"modules": modules, "differentials": differentials}
    return validate_payload(payload, "resolution")


def resolution_from_json(payload, F=FieldSpec(0)):
    """Rebuild a GradedFreeResolution from its JSON payload.

    Basis keys are reconstructed positionally: repeated appearances of
    the same source element within one module get indices 0, 1, …
    in file order.
    """
    validate_payload(payload, "resolution")
    if len(payload["differentials"]) != max(len(payload["modules"]) - 1, 0):
        raise InputError("need exactly one differential per consecutive "
                         "pair of modules")
    modules, keys = {}, []
    for pos, rows in enumerate(payload["modules"]):
        seen, mods, pos_keys = {}, [], []
        for row in rows:
            e = frozenset(i - 1 for i in row["source_element"])
            j = seen.get(e, 0)
            seen[e] = j + 1
            mods.append(((e, j), Monomial(row["degree"])))
            pos_keys.append((e, j))
        modules[pos] = tuple(mods)
        keys.append(pos_keys)
    differentials = {}
    for pos, entries in enumerate(payload["differentials"], start=1):
        cols = {}
        for ent in entries:
            try:
                rowkey = keys[pos - 1][ent["row"]]
                colkey = keys[pos][ent["col"]]
            except IndexError:
                raise InputError(f"row/col index out of range in "
                                 f"differential {pos}") from None
            scalar = Fraction(ent["scalar"])
            if F.characteristic and scalar.denominator != 1:
                raise InputError(f"non-integer scalar {ent['scalar']} in "
                                 f"characteristic {F.characteristic}")
            cols.setdefault(colkey, {})[rowkey] = (
                F.coerce(scalar), Monomial(ent["monomial"]))
        differentials[pos] = cols
    return GradedFreeResolution(F, modules, differentials)


# --------------------------------------------------------------------------
# DOT export

def export_dot(P, highlight, labels=None):
    """Graphviz text for the Hasse diagram of P.

    Elements of ``highlight`` (the Betti membership, normally) are drawn
    filled, everything else hollow.  Node and edge order is the canonical
    element order, so the output is byte-identical across runs.
    """
    marked = {frozenset(e) for e in highlight}

    def name(e):
        return "{" + ",".join(str(i + 1) for i in sorted(e)) + "}"

    lines = ["digraph hasse {",
             "  rankdir=BT;",
             "  node [shape=ellipse, fontsize=10];"]
    for e in P.elements:
        label = labels[e] if labels else name(e)
        style = "filled" if e in marked else "solid"
        lines.append(f'  "{name(e)}" [label="{label}", style={style}];')
    pairs = sorted(P.cover_pairs(),
                   key=lambda pq: (element_key(pq[0]), element_key(pq[1])))
    for p, q in pairs:
        lines.append(f'  "{name(p)}" -> "{name(q)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# input loading

def _read_text(path):
    try:
        return Path(path).read_text()
    except OSError as err:
        raise InputError(f"cannot read {path}: {err.strerror}") from None


def _read_json(path):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as err:
        raise InputError(f"{path}: not valid JSON ({err})") from None


def _load_ideal(path):
    if not str(path).endswith(".ideal"):
        raise InputError(f"{path}: expected an .ideal file")
    return parse_ideal(_read_text(path))


def _load_lattice(path):
    """A degree-labeled lattice from an .ideal or .lattice file, plus the
    variable names when they are known (None for .lattice files)."""
    text = str(path)
    if text.endswith(".ideal"):
        I = _load_ideal(path)
        return lcm_lattice(I), I.variables
    if text.endswith(".lattice"):
        try:
            return lattice_from_json(_read_json(path)), None
        except ValueError as err:
            raise InputError(f"{path}: {err}") from None
    raise InputError(f"{path}: expected an .ideal or .lattice file")


def _load_family(path):
    """Like _load_lattice but tolerates non-lattice families (saved Betti
    posets, say) by falling back to a plain Poset."""
    text = str(path)
    if text.endswith(".lattice"):
        supports, n, degrees = family_from_json(_read_json(path))
        try:
            return FiniteAtomicLattice(supports, n, degrees)
        except ValueError:
            return Poset(supports)
    lattice, _ = _load_lattice(path)
    return lattice


def _parse_facets(text):
    """Facets like "1,2; 2,3" (1-based vertices) → SimplicialComplex."""
    facets = []
    for part in text.replace(";", " ").split():
        try:
            vertices = {int(v) - 1 for v in part.split(",")}
        except ValueError:
            raise InputError(f"bad facet {part!r}: expected comma-separated "
                             f"vertex numbers") from None
        if any(v < 0 for v in vertices):
            raise InputError(f"bad facet {part!r}: vertices are 1-based")
        facets.append(vertices)
    if not facets:
        raise InputError("no facets given")
    return SimplicialComplex(facets)


# --------------------------------------------------------------------------
# run configuration

COMMAND_NAMES = (
    "lcm-lattice", "betti-poset", "betti-numbers", "is-rigid", "resolve",
    "relabel", "verify", "taylor", "scarf", "deform-simplicial",
    "deform-search", "compare", "export-dot",
)


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs: the command, its input paths, the
    coefficient field, the output format and destination, and the knobs
    (seed, search budget, explicit facets, comparison mode)."""

    command: str
    inputs: tuple = ()
    characteristic: int = 0
    fmt: str = "text"
    output: str = None
    seed: int = 0
    budget: int = 1
    facets: str = None
    join_preserving: bool = False

    def __post_init__(self):
        if self.command not in COMMAND_NAMES:
            raise InputError(f"unknown command {self.command!r}")
        try:
            FieldSpec(self.characteristic)
        except ValueError as err:
            raise InputError(str(err)) from None
        if self.fmt not in ("text", "json", "dot"):
            raise InputError(f"unknown output format {self.fmt!r}")

    @property
    def field(self):
        return FieldSpec(self.characteristic)


def _emit(text, cfg):
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload, cfg):
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", cfg)


def _totals_line(table):
    return "totals: " + ",".join(str(b) for b in table.totals())


def _yesno(flag):
    return "yes" if flag else "no"


def _support_text(e):
    return "{" + ",".join(str(i + 1) for i in sorted(e)) + "}"


def _table_from_lattice(L, F):
    """Betti table of a degree-labeled lattice (quotient convention:
    rank one in the unit degree at position 0)."""
    table = BettiTable()
    table.entries[(0, L.degree(frozenset()))] = 1
    for e in L.elements:
        if e:
            for i, h in interval_ranks(L, e, F).items():
                table.entries[(i + 2, L.degree(e))] = h
    return table


# --------------------------------------------------------------------------
# commands

def cmd_lcm_lattice(cfg):
    I = _load_ideal(cfg.inputs[0])
    L = lcm_lattice(I)
    _emit_json(family_to_json(L, L.n_atoms, L.degrees), cfg)
    return 0


def cmd_betti_poset(cfg):
    L, _ = _load_lattice(cfg.inputs[0])
    B = betti_poset(L, cfg.field)
    degrees = None
    if L.degrees is not None:
        degrees = {e: L.degree(e) for e in B.elements}
    _emit_json(family_to_json(B, L.n_atoms, degrees), cfg)
    return 0


def cmd_betti_numbers(cfg):
    path = cfg.inputs[0]
    if str(path).endswith(".ideal"):
        table = betti_numbers(_load_ideal(path), cfg.field)
    else:
        L, _ = _load_lattice(path)
        if L.degrees is not None:
            table = _table_from_lattice(L, cfg.field)
        elif cfg.fmt == "json":
            raise InputError(f"{path}: the graded table needs degree labels")
        else:
            totals = lattice_betti_totals(L, cfg.field)
            _emit("totals: " + ",".join(str(b) for b in totals) + "\n", cfg)
            return 0
    if cfg.fmt == "json":
        _emit_json(validate_payload(table.to_json_dict(), "betti"), cfg)
    else:
        _emit(_totals_line(table) + "\n", cfg)
    return 0


def cmd_is_rigid(cfg):
    L, _ = _load_lattice(cfg.inputs[0])
    report = rigidity_report(L, cfg.field)
    if report.rigid:
        _emit("rigid\n", cfg)
        return 0
    _emit(f"not rigid [{report.rule}]: {report.detail}\n", cfg)
    return 2


def _resolve(I, F):
    L = lcm_lattice(I)
    B = betti_poset(L, F)
    frame = build_frame(B, F)
    res = homogenize(frame, {e: L.degree(e) for e in B.elements})
    return L, B, res


def cmd_resolve(cfg):
    I = _load_ideal(cfg.inputs[0])
    _, _, res = _resolve(I, cfg.field)
    report = verify_resolution(res)
    _emit_json(resolution_to_json(res), cfg)
    ranks = ",".join(str(r) for r in res.ranks())
    print(f"ranks: {ranks}", file=sys.stderr)
    print(report.summary(), file=sys.stderr)
    return 0 if report.ok else 2


def cmd_relabel(cfg):
    source = _load_ideal(cfg.inputs[0])
    target = _load_ideal(cfg.inputs[1])
    F = cfg.field
    LS, BS, res = _resolve(source, F)
    LT = lcm_lattice(target)
    BT = betti_poset(LT, F)
    iso = is_isomorphic(BS, BT)
    if iso is None:
        print("Betti posets are not isomorphic; nothing to relabel",
              file=sys.stderr)
        return 2
    moved = relabel(res, iso, {e: LT.degree(e) for e in LT.elements})
    report = verify_resolution(moved)
    _emit_json(resolution_to_json(moved), cfg)
    print(report.summary(), file=sys.stderr)
    return 0 if report.ok else 2


def cmd_verify(cfg):
    path = cfg.inputs[0]
    if not str(path).endswith(".res"):
        raise InputError(f"{path}: expected a .res file")
    res = resolution_from_json(_read_json(path), cfg.field)
    report = verify_resolution(res)
    _emit(report.summary() + "\n", cfg)
    return 0 if report.ok else 2


def cmd_taylor(cfg):
    I = _load_ideal(cfg.inputs[0])
    table = taylor_betti(I, cfg.field)
    if cfg.fmt == "json":
        _emit_json(validate_payload(table.to_json_dict(), "betti"), cfg)
    else:
        _emit(_totals_line(table) + "\n", cfg)
    return 0


def cmd_scarf(cfg):
    I = _load_ideal(cfg.inputs[0])
    X = scarf_complex(I)
    faces = sorted(X.faces, key=element_key)
    if cfg.fmt == "json":
        payload = {"n_atoms": len(I.generators),
                   "supports": [[i + 1 for i in sorted(f)] for f in faces]}
        _emit_json(validate_payload(payload, "lattice"), cfg)
    else:
        _emit("".join(_support_text(f) + "\n" for f in faces), cfg)
    return 0


def cmd_deform_simplicial(cfg):
    I = _load_ideal(cfg.inputs[0])
    X = _parse_facets(cfg.facets) if cfg.facets else scarf_complex(I)
    result = simplicial_rigid_deformation(I, X, cfg.field)
    cert = result.certificate
    added = " ".join(_support_text(e) for e in result.added) or "none"
    lines = [
        f"target lattice: {len(result.target_lattice.elements)} elements",
        f"added supports: {added}",
        f"certificate: rigid={_yesno(cert.rigid)} "
        f"betti-preserved={_yesno(cert.betti_preserved)} "
        f"relabel-verified={_yesno(cert.relabel_verified)}",
        f"route: {result.route or 'none'}",
        f"comparable to source: {_yesno(result.comparable_to_source)}",
    ]
    print("\n".join(lines))
    if cfg.output:
        J = result.target_ideal
        LT = lcm_lattice(J)
        Path(cfg.output).write_text(
            json.dumps(family_to_json(LT, LT.n_atoms, LT.degrees),
                       indent=2, sort_keys=True) + "\n")
    return 0 if cert.all_true else 2


def cmd_deform_search(cfg):
    I = _load_ideal(cfg.inputs[0])
    outcome = search_rigid_deformation(I, budget=cfg.budget, F=cfg.field)
    print("base totals: " + ",".join(str(b) for b in outcome.base_totals))
    print(f"budget: {cfg.budget}")
    candidate = outcome.betti_poset_candidate
    if candidate is not None:
        totals = ",".join(str(b) for b in candidate.totals)
        print(f"betti-poset candidate: {candidate.lattice_size} elements, "
              f"totals {totals}, certified={_yesno(candidate.certified)}")
    if outcome.augmentation_log:
        print(f"scanned {len(outcome.augmentation_log)} augmentations:")
        for entry in outcome.augmentation_log:
            added = " ".join(_support_text(e) for e in entry.added)
            totals = ",".join(str(b) for b in entry.totals)
            print(f"  +{added}: {entry.lattice_size} elements, "
                  f"totals {totals}")
    if not outcome:
        print("no rigid deformation found within budget")
        return 2
    result = outcome.result
    added = " ".join(_support_text(e) for e in result.added) or "none"
    print(f"rigid deformation found: added {added}; "
          f"{len(result.target_lattice.elements)} elements; "
          f"route {result.route}")
    if cfg.output:
        J = result.target_ideal
        LT = lcm_lattice(J)
        Path(cfg.output).write_text(
            json.dumps(family_to_json(LT, LT.n_atoms, LT.degrees),
                       indent=2, sort_keys=True) + "\n")
    return 0


def cmd_compare(cfg):
    first = _load_family(cfg.inputs[0])
    second = _load_family(cfg.inputs[1])
    if cfg.join_preserving:
        for which, P in (("first", first), ("second", second)):
            if not isinstance(P, FiniteAtomicLattice):
                raise InputError(f"{which} input is not an atomic lattice; "
                                 f"join-preserving comparison needs lattices")
        if first.n_atoms != second.n_atoms:
            fwd = bwd = None
        else:
            fwd = join_preserving_map(first, second)
            bwd = join_preserving_map(second, first)
        print(f"first -> second: {'found' if fwd else 'none'}")
        print(f"second -> first: {'found' if bwd else 'none'}")
        if fwd is None and bwd is None:
            print("none in either direction")
            return 2
        return 0
    iso = is_isomorphic(first, second)
    print("isomorphic" if iso else "not isomorphic")
    return 0 if iso else 2


def cmd_export_dot(cfg):
    L, variables = _load_lattice(cfg.inputs[0])
    B = betti_poset(L, cfg.field)
    labels = None
    if L.degrees is not None:
        if variables is None:
            width = len(L.degree(frozenset()))
            variables = tuple(f"x{i + 1}" for i in range(width))
        labels = {e: L.degree(e).format(variables) for e in L.elements}
    _emit(export_dot(L, B.elements, labels), cfg)
    return 0


COMMANDS = {
    "lcm-lattice": cmd_lcm_lattice,
    "betti-poset": cmd_betti_poset,
    "betti-numbers": cmd_betti_numbers,
    "is-rigid": cmd_is_rigid,
    "resolve": cmd_resolve,
    "relabel": cmd_relabel,
    "verify": cmd_verify,
    "taylor": cmd_taylor,
    "scarf": cmd_scarf,
    "deform-simplicial": cmd_deform_simplicial,
    "deform-search": cmd_deform_search,
    "compare": cmd_compare,
    "export-dot": cmd_export_dot,
}


def run(cfg):
    """Execute one configured command; returns the exit status."""
    random.seed(cfg.seed)
    return COMMANDS[cfg.command](cfg)


# --------------------------------------------------------------------------
# argument parsing

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--char", type=int, default=0, metavar="P",
                        help="coefficient field characteristic, 0 or a prime"
                             " (default 0)")
    common.add_argument("-o", "--output", metavar="PATH",
                        help="write the artifact to PATH instead of stdout")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized helpers (default 0)")

    parser = _Parser(
        prog="rigidres",
        description="lcm-lattices, Betti posets, rigidity, minimal free "
                    "resolutions, and rigid deformations of monomial ideals",
        epilog="exit codes: 0 success, 1 input error, 2 negative verdict; "
               "set RIGIDRES_WORKERS to bound worker parallelism")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("lcm-lattice", parents=[common],
                       help="lattice of lcms of generator subsets (JSON)")
    p.add_argument("input", help=".ideal file")

    p = sub.add_parser("betti-poset", parents=[common],
                       help="subposet of homologically contributing degrees")
    p.add_argument("input", help=".ideal or .lattice file")

    p = sub.add_parser("betti-numbers", parents=[common],
                       help="multigraded Betti numbers via interval homology")
    p.add_argument("input", help=".ideal or degree-labeled .lattice file")
    p.add_argument("--json", action="store_true",
                   help="full graded table as JSON instead of the totals")

    p = sub.add_parser("is-rigid", parents=[common],
                       help="check the two rigidity conditions")
    p.add_argument("input", help=".ideal or .lattice file")

    p = sub.add_parser("resolve", parents=[common],
                       help="minimal free resolution from the Betti poset, "
                            "verified (JSON)")
    p.add_argument("input", help=".ideal file")

    p = sub.add_parser("relabel", parents=[common],
                       help="transport the source resolution onto the target "
                            "across a Betti-poset isomorphism")
    p.add_argument("source", help=".ideal file")
    p.add_argument("target", help=".ideal file")

    p = sub.add_parser("verify", parents=[common],
                       help="check a stored resolution: homogeneous, "
                            "minimal, exact on every degree strand")
    p.add_argument("input", help=".res file")

    p = sub.add_parser("taylor", parents=[common],
                       help="Betti numbers by brute force over all "
                            "generator subsets (independent oracle)")
    p.add_argument("input", help=".ideal file")
    p.add_argument("--json", action="store_true",
                   help="full graded table as JSON instead of the totals")

    p = sub.add_parser("scarf", parents=[common],
                       help="generator subsets with a unique lcm")
    p.add_argument("input", help=".ideal file")
    p.add_argument("--json", action="store_true",
                   help="faces as a JSON support family")

    p = sub.add_parser("deform-simplicial", parents=[common],
                       help="meet-closure deformation along a simplicial "
                            "complex on the generators, with certificate")
    p.add_argument("input", help=".ideal file")
    p.add_argument("--facets", metavar="FACETS",
                   help="facets as 1-based vertex lists, e.g. '1,2; 2,3' "
                        "(default: the scarf complex)")

    p = sub.add_parser("deform-search", parents=[common],
                       help="bounded scan for a rigid deformation")
    p.add_argument("input", help=".ideal file")
    p.add_argument("--budget", type=int, default=1,
                   help="max number of supports to adjoin (default 1)")

    p = sub.add_parser("compare", parents=[common],
                       help="compare two posets: isomorphism, or "
                            "join-preserving maps with --join-preserving")
    p.add_argument("first", help=".ideal or .lattice file")
    p.add_argument("second", help=".ideal or .lattice file")
    p.add_argument("--join-preserving", action="store_true",
                   help="look for atom-bijective join-preserving maps "
                        "in both directions")

    p = sub.add_parser("export-dot", parents=[common],
                       help="Hasse diagram as Graphviz DOT, contributors "
                            "filled")
    p.add_argument("input", help=".ideal or .lattice file")

    return parser


def config_from_args(ns):
    inputs = tuple(getattr(ns, name) for name
                   in ("input", "source", "target", "first", "second")
                   if hasattr(ns, name))
    if ns.command == "export-dot":
        fmt = "dot"
    elif ns.command in ("lcm-lattice", "betti-poset", "resolve", "relabel"):
        fmt = "json"
    elif getattr(ns, "json", False):
        fmt = "json"
    else:
        fmt = "text"
    return RunConfig(
        command=ns.command,
        inputs=inputs,
        characteristic=ns.char,
        fmt=fmt,
        output=ns.output,
        seed=ns.seed,
        budget=getattr(ns, "budget", 1),
        facets=getattr(ns, "facets", None),
        join_preserving=getattr(ns, "join_preserving", False),
    )


def main(argv=None):
    try:
        ns = build_parser().parse_args(argv)
        return run(config_from_args(ns))
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except jsonschema.ValidationError as err:
        print(f"error: invalid JSON payload: {err.message}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
