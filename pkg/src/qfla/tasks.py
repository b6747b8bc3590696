"""Execution of workspace tasks and rendering of their reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable

from .bialgebra import (Cobracket, RMatrix, Verdict, classify_r, cobracket_from_r,
                        is_one_cocycle, validate_bialgebra)
from .double import build_double
from .equivariant import assemble_double_action, induce_dual_action, validate_gqf
from .errors import QflaError
from .exact import rational_det_rank
from .frobenius import (SYMBOLIC_MAX_DIM, SkewForm, exactness_witness,
                        frobenius_functional_search, frobenius_test_symbolic, is_two_cocycle,
                        quasi_frobenius)
from .lie import LieAlgebra, Representation, validate_lie, validate_representation
from .workspace import Step, Task, WorkspaceDocument, format_combo, format_rational


@dataclass(frozen=True)
class Outcome:
    ok: bool
    detail: str
    failure: tuple | None = None


@dataclass(frozen=True)
class TaskResult:
    name: str
    passed: bool
    detail: str
    failure_indices: tuple = ()
    elapsed_ms: float = field(default=0.0, compare=False)


@dataclass(frozen=True)
class RunReport:
    results: tuple[TaskResult, ...] = ()

    @property
    def exit_code(self) -> int:
        return 0 if all(r.passed for r in self.results) else 1


@dataclass(frozen=True)
class RunOptions:
    seed: int = 0
    max_dim: int = SYMBOLIC_MAX_DIM


class UsageProblem(QflaError):
    """A task names objects of the wrong kind or in the wrong number."""

    kind = "usage"


def _vector(v, labels) -> str:
    return format_combo((c, lab) for c, lab in zip(v, labels)) or "0"


def _labels(g: LieAlgebra, idx) -> str:
    return "(" + ", ".join(g.basis[i] for i in idx) + ")"


class _Context:
    def __init__(self, doc: WorkspaceDocument, opts: RunOptions):
        self.doc = doc
        self.opts = opts

    def obj(self, name: str, *types):
        v = self.doc.get(name)
        if types and not isinstance(v, types):
            kinds = " or ".join(t.__name__ for t in types)
            raise UsageProblem(f"{name!r} is a {type(v).__name__}, expected {kinds}")
        return v

    def rep_target(self, name: str) -> SkewForm:
        target = self.doc.section(name).ref("on")
        form = self.doc.get(target)
        if not isinstance(form, SkewForm):
            raise UsageProblem(f"representation {name!r} acts on an algebra, not on a form")
        return form

    # -- commands ---------------------------------------------------------
    def validate(self, name: str) -> Outcome:
        v = self.obj(name, LieAlgebra, SkewForm, Representation, Cobracket)
        if isinstance(v, LieAlgebra):
            rep = validate_lie(v.c)
            if rep:
                return Outcome(True, f"{name} is a Lie algebra of dim {v.dim}")
            what = "antisymmetry" if not rep.antisymmetry else "Jacobi"
            return Outcome(False, f"{name} fails {what} at {_labels(v, rep.first_failure)}",
                           rep.first_failure)
        if isinstance(v, SkewForm):
            return self._quasi_frobenius(name, v)
        if isinstance(v, Cobracket):
            return self.bialgebra(name)
        form = self.doc.get(self.doc.section(name).ref("on"))
        if not isinstance(form, SkewForm):
            rep = validate_representation(v)
            if rep:
                return Outcome(True, f"{name} is a representation of {v.source.name}")
            return Outcome(False, f"{name} breaks the module law at "
                                  f"{_labels(v.source, rep.first_failure)}", rep.first_failure)
        e = validate_gqf(v.source, quasi_frobenius(form), v)
        return self._equivariant(name, e)

    def _equivariant(self, name: str, e) -> Outcome:
        for flag in ("module_law", "derivation", "invariance"):
            rep = getattr(e, flag)
            if not rep:
                return Outcome(False, f"{name}: {flag.replace('_', ' ')} fails at "
                                      f"{rep.first_failure}", rep.first_failure)
        if not e.target.ok:
            return Outcome(False, f"{name}: target form is not quasi-Frobenius")
        return Outcome(True, f"{name} is an equivariant quasi-Frobenius structure "
                             f"({e.acting.dim}-dim acting algebra)")

    def _quasi_frobenius(self, name: str, beta: SkewForm) -> Outcome:
        cyc = is_two_cocycle(beta)
        if not cyc:
            return Outcome(False, f"{name} is not a 2-cocycle at "
                                  f"{_labels(beta.algebra, cyc.first_failure)}", cyc.first_failure)
        rank = rational_det_rank(beta.gram).rank
        if rank != beta.algebra.dim:
            return Outcome(False, f"{name} is degenerate (rank {rank} of {beta.algebra.dim})")
        return Outcome(True, f"{name} is quasi-Frobenius on {beta.algebra.name}")

    def frobenius(self, name: str) -> Outcome:
        g = self.obj(name, LieAlgebra, SkewForm)
        if isinstance(g, SkewForm):
            beta = g
            alpha = exactness_witness(beta)
            if alpha is None:
                return Outcome(False, f"{name} is not exact")
            return Outcome(True, f"{name} = alpha o [.,.] with alpha = "
                                 f"{_vector(alpha, [b + '*' for b in beta.algebra.basis])}")
        det = frobenius_test_symbolic(g, max_dim=self.opts.max_dim)
        if not det:
            return Outcome(False, "not Frobenius: symbolic determinant = 0")
        alpha = frobenius_functional_search(g, seed=self.opts.seed, max_dim=self.opts.max_dim)
        if alpha is None:
            return Outcome(False, f"symbolic determinant = {det.format(g.basis)} "
                                  f"but no functional found (seed {self.opts.seed})")
        alpha_s = _vector(alpha, [b + "*" for b in g.basis])
        return Outcome(True, f"Frobenius: symbolic determinant = {det.format(g.basis)}; "
                             f"alpha = {alpha_s}")

    def cocycle(self, name: str) -> Outcome:
        v = self.obj(name, SkewForm, Cobracket)
        if isinstance(v, SkewForm):
            rep = is_two_cocycle(v)
            if rep:
                return Outcome(True, f"{name} is a 2-cocycle")
            return Outcome(False, f"{name} fails the cocycle identity at "
                                  f"{_labels(v.algebra, rep.first_failure)}", rep.first_failure)
        rep = is_one_cocycle(v.algebra, v)
        if rep:
            return Outcome(True, f"{name} is a 1-cocycle")
        return Outcome(False, f"{name} fails the 1-cocycle identity at "
                              f"{_labels(v.algebra, rep.first_failure)}", rep.first_failure)

    def _cobracket_of(self, name: str) -> Cobracket:
        v = self.obj(name, Cobracket, RMatrix)
        return cobracket_from_r(v.algebra, v) if isinstance(v, RMatrix) else v

    def bialgebra(self, name: str) -> Outcome:
        gamma = self._cobracket_of(name)
        b = validate_bialgebra(gamma.algebra, gamma)
        if b.valid:
            return Outcome(True, f"{name} makes {gamma.algebra.name} a Lie bialgebra")
        bad = [n for n, ok in (("skew", b.skew), ("co-Jacobi", b.co_jacobi),
                               ("1-cocycle", b.one_cocycle)) if not ok]
        return Outcome(False, f"{name} fails {', '.join(bad)} (first at {b.first_failure})",
                       b.first_failure)

    def double(self, name: str) -> Outcome:
        gamma = self._cobracket_of(name)
        d = build_double(validate_bialgebra(gamma.algebra, gamma))
        t = d.total
        rels = "; ".join(f"[{t.basis[i]},{t.basis[j]}] = {_vector(v, t.basis)}"
                         for i, j, v in t.relations())
        verdict = classify_r(t, d.canonical_r).verdict
        return Outcome(True, f"double {t.name} of dim {t.dim}: {rels or 'abelian'}; "
                             f"canonical r {verdict.label}")

    def classify(self, name: str) -> Outcome:
        r = self.obj(name, RMatrix)
        cl = classify_r(r.algebra, r)
        flags = (f"sym-invariant={cl.sym_invariant} yb-invariant={cl.yb_invariant} "
                 f"cybe={cl.cybe} skew={cl.skew}")
        if cl.verdict >= Verdict.QUASITRIANGULAR:
            return Outcome(True, f"{name} is {cl.verdict.label} ({flags})")
        return Outcome(False, f"{name} is {cl.verdict.label} ({flags})", cl.first_cybe_failure())

    def _equivariant_args(self, rep: str, r: str):
        rho = self.obj(rep, Representation)
        rmat = self.obj(r, RMatrix)
        e = validate_gqf(rho.source, quasi_frobenius(self.rep_target(rep)), rho)
        return e, rmat

    def induce(self, rep: str, r: str) -> Outcome:
        e, rmat = self._equivariant_args(rep, r)
        psi = induce_dual_action(e, rmat)
        law = validate_representation(psi)
        if not law:
            return Outcome(False, f"induced action breaks the module law at {law.first_failure}",
                           law.first_failure)
        return Outcome(True, f"induced action of {psi.source.name} on {e.target.algebra.name} "
                             f"is a representation")

    def assemble(self, rep: str, r: str) -> Outcome:
        e, rmat = self._equivariant_args(rep, r)
        da = assemble_double_action(e, rmat)
        if not da.mixed:
            return Outcome(False, f"mixed compatibility fails at {da.mixed.first_failure}",
                           da.mixed.first_failure)
        out = self._equivariant(rep, da.structure)
        if not out.ok:
            return out
        return Outcome(True, f"{da.double.total.name} acts on {e.target.algebra.name} "
                             f"extending {rep}")

    def report(self, name: str) -> Outcome:
        v = self.doc.get(name)
        if isinstance(v, LieAlgebra):
            rels = "; ".join(f"[{v.basis[i]},{v.basis[j]}] = {_vector(c, v.basis)}"
                             for i, j, c in v.relations())
            return Outcome(True, f"{name}: dim {v.dim}; {rels or 'abelian'}")
        if isinstance(v, SkewForm):
            dr = rational_det_rank(v.gram)
            return Outcome(True, f"{name}: rank {dr.rank}, det {format_rational(dr.det)}")
        if isinstance(v, RMatrix):
            return Outcome(True, f"{name}: {classify_r(v.algebra, v).verdict.label}")
        return Outcome(True, f"{name}: {self.doc.section(name).kind}")


ARITY = {"validate": 1, "frobenius": 1, "cocycle": 1, "bialgebra": 1, "double": 1,
         "classify": 1, "induce": 2, "assemble": 2, "report": 1}


def run_step(ctx: _Context, step: Step) -> Outcome:
    want = ARITY[step.command]
    if len(step.args) != want:
        raise UsageProblem(f"{step.command} takes {want} name(s), got {len(step.args)}")
    fn: Callable[..., Outcome] = getattr(ctx, step.command)
    try:
        return fn(*step.args)
    except UsageProblem:
        raise
    except QflaError as err:
        return Outcome(False, f"{err.kind} error: {err}", err.first_failure)


def run_task(doc: WorkspaceDocument, task: Task, opts: RunOptions = RunOptions()) -> TaskResult:
    ctx = _Context(doc, opts)
    start = time.perf_counter()
    details, failures, passed = [], [], True
    for step in task.steps:
        out = run_step(ctx, step)
        met = out.ok == step.expect_pass
        passed &= met
        text = out.detail if step.expect_pass else f"expected failure: {out.detail}"
        if not met:
            text = ("unexpectedly passed: " if out.ok else "") + text
            if out.failure is not None:
                failures.append(tuple(out.failure))
        details.append(text)
    elapsed = (time.perf_counter() - start) * 1000
    return TaskResult(task.name, passed, "; ".join(details) or "no steps",
                      tuple(failures), elapsed)


def run_document(doc: WorkspaceDocument, opts: RunOptions = RunOptions(),
                 tasks: list[Task] | None = None) -> RunReport:
    if tasks is None:
        tasks = [s.value for s in doc.of_kind("task")]
    return RunReport(tuple(run_task(doc, t, opts) for t in tasks))


def render_report(report: RunReport, machine: bool = False) -> str:
    lines = []
    for r in report.results:
        if machine:
            lines.append(json.dumps({
                "task": r.name,
                "verdict": "pass" if r.passed else "fail",
                "failure_indices": [list(f) for f in r.failure_indices],
                "elapsed_ms": round(r.elapsed_ms, 3),
                "detail": r.detail,
            }, sort_keys=True))
        else:
            lines.append(f"TASK {r.name}: {'PASS' if r.passed else 'FAIL'} — {r.detail}")
    return "".join(line + "\n" for line in lines)
