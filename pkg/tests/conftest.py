"""Session-wide verdict audit and the acceptance summary.

Every decisive verdict from the wrapped ideal-lab entry points is compared
with the registered model oracle; any disagreement fails the session.
"""

import functools

from cohnjordan import ideals
from cohnjordan.ideals import FinGenLeftIdeal
from cohnjordan.models.registry import has_model, model_for
from cohnjordan.monoid import GroupElement, as_monoid

ACCEPTANCE: dict = {}
AUDIT = {"checked": 0, "contradictions": []}


def record_criterion(number: int, title: str, passed: bool, detail: str, elapsed: float, limit):
    ACCEPTANCE[number] = (title, passed, detail, elapsed, limit)


def _truth(kind, args):
    if kind == "is_closed":
        M = args[0]
        ext = M.ext
        if not has_model(ext):
            return None
        model = model_for(ext)
        closure = model.contract([model.to_model(ext.embed(g)) for g in M.gens])
        if closure is None:
            return None
        return all(ext.ring.ideal_membership(g, list(M.gens)).is_member for g in closure)
    if kind == "ext_ideal_member":
        a, I = args[0], args[1].promote()
    elif kind == "closure_member":
        r, M = args[0], args[1]
        a, I = M.ext.embed(r), M.promote()
    else:
        r, I, s = args[0], args[1].promote(), args[2]
        s = as_monoid(s, I.ext.k)
        a = I.ext.act(GroupElement(tuple(-e for e in s.exps)), I.ext.embed(r))
    ext = I.ext
    if not has_model(ext):
        return None
    model = model_for(ext)
    return model.ideal_member(model.to_model(a), [model.to_model(g) for g in I.gens])


def _wrap(name):
    fn = getattr(ideals, name)

    @functools.wraps(fn)
    def audited(*args, **kwargs):
        verdict = fn(*args, **kwargs)
        if verdict.decisive:
            truth = _truth(name, args)
            if truth is not None:
                AUDIT["checked"] += 1
                if truth != verdict.is_member:
                    AUDIT["contradictions"].append((name, [str(a) for a in args], verdict))
        return verdict

    audited.unwrapped = fn
    setattr(ideals, name, audited)


def pytest_configure(config):
    for name in ("ext_ideal_member", "gamma_member", "closure_member", "is_closed"):
        if not hasattr(getattr(ideals, name), "unwrapped"):
            _wrap(name)


def pytest_sessionfinish(session, exitstatus):
    if AUDIT["contradictions"] and session.exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    tr = terminalreporter
    if ACCEPTANCE:
        tr.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            title, passed, detail, elapsed, limit = ACCEPTANCE[number]
            budget = f" (limit {limit:g}s)" if limit else ""
            tr.write_line(f"criterion {number} {'PASS' if passed else 'FAIL'}: {title}: {detail}; "
                          f"{elapsed:.2f}s{budget}")
    n_bad = len(AUDIT["contradictions"])
    tr.write_line(f"verdict audit: {AUDIT['checked']} decisive verdicts compared with model oracles, "
                  f"{n_bad} contradictions")
    for name, args, verdict in AUDIT["contradictions"][:10]:
        tr.write_line(f"  {name}{tuple(args)} -> {verdict.outcome.value}")
