"""
Conductor lower bounds from auxiliary characters
"""

import math
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import logfire
from loguru import logger

from app.auxiliary.constructions import build_aux
from app.auxiliary.model import METHOD_TAGS, AuxCandidate, AuxMethod, BoundReport, CandidateEvaluation, MethodTag
from app.auxiliary.vertices import enumerate_vertices, vertex_candidates
from app.characters.model import CharacterTable, ClassFunction, GaloisTypeQuery
from app.characters.service import conjugation_classes, inner_product, is_faithful, value_extremes
from app.config import get_settings
from app.exceptions import AuxConstructionError, BracketError, VertexCapExceeded
from app.kernel.service import big_m
from app.tame.model import ExponentBracket, ExponentMode
from app.tame.service import exponent_bracket


def exponent_mode(table: CharacterTable) -> ExponentMode:
    return ExponentMode.ALPHA_TW if table.tame_wild else ExponentMode.ALPHA_HAT


def _evaluate(table: CharacterTable, conj_index: int, cand: AuxCandidate, bracket: ExponentBracket, mode: ExponentMode) -> CandidateEvaluation:
    phi = cand.phi
    n, r, u = phi.degree, phi[conj_index], inner_product(table, phi, table.unital())
    log_m = big_m(n, r, u).log_value
    exponent = bracket.exponent(mode)
    return CandidateEvaluation(
        conj_label=table.classes[conj_index].label,
        source=cand.source,
        method_tag=cand.method_tag,
        n=n,
        r=r,
        u=u,
        exponent=exponent,
        value=math.exp(float(exponent) * log_m),
        walp_value=math.exp(float(bracket.walp) * log_m),
    )


def eval_bound(table: CharacterTable, chi: ClassFunction, conj_label: str, cand: AuxCandidate, mode: ExponentMode) -> float:
    """
    M(phi(e), phi(c), (phi, 1))^u with u the walp or alp exponent of (chi, phi)

    Args:
        table: Character table
        chi: Character being bounded
        conj_label: Class of complex conjugation
        cand: Nonnegative nonzero auxiliary character
        mode: Which end of the exponent bracket to use

    Returns:
        Lower bound for the root conductor of chi

    Raises:
        BracketError: If the exponent bracket of (chi, phi) is undefined
    """
    bracket = exponent_bracket(table, chi, cand.phi)
    return _evaluate(table, table.class_index(conj_label), cand, bracket, mode).value


def closed_form_bound(table: CharacterTable, chi: ClassFunction, conj_label: str, method: AuxMethod) -> float:
    """
    Closed-form walp bound of a construction, written in terms of chi alone

    linear: M(n + check, r + check, check)^((n + check)/n)
    square: M(n^2, r^2, (chi, chi))^(n/(n + hat))
    quadratic: M(n n*, r r*, (chi, chi))^(n*/(n* + hat)) with n* = n + tilde, r* = r + tilde
    galois: M(|G|, delta |G|, 1)^((n - hat)/n) with delta = 1 when c is the identity
    """
    conj = table.class_index(conj_label)
    n, r = chi.degree, chi[conj]
    extremes = value_extremes(chi)
    norm = inner_product(table, chi, chi)
    match method:
        case AuxMethod.LINEAR:
            m, exponent = big_m(n + extremes.check, r + extremes.check, extremes.check), (n + extremes.check) / n
        case AuxMethod.SQUARE:
            m, exponent = big_m(n * n, r * r, norm), n / (n + extremes.hat)
        case AuxMethod.QUADRATIC:
            if extremes.tilde is None:
                raise AuxConstructionError("quadratic construction needs a negative character value")
            n_star, r_star = n + extremes.tilde, r + extremes.tilde
            m, exponent = big_m(n * n_star, r * r_star, norm), n_star / (n_star + extremes.hat)
        case AuxMethod.GALOIS:
            order = table.group_order
            m, exponent = big_m(order, order if conj == 0 else 0, 1), (n - extremes.hat) / n
    return math.exp(float(exponent) * m.log_value)


def signature_bound(n: int, r: int, w: int) -> float:
    """
    Degree-based bound M(n^2, r^2, w)^(n/(2n-2))

    Raises:
        ValueError: If n < 2, |r| > n or w < 1
    """
    if n < 2:
        raise ValueError(f"signature bound needs n >= 2, got {n}")
    if abs(r) > n or w < 1:
        raise ValueError(f"signature bound needs |r| <= n and w >= 1, got r={r}, w={w}")
    return math.exp(Fraction(n, 2 * n - 2) * big_m(n * n, r * r, w).log_value)


def default_candidates(
    table: CharacterTable,
    chi: ClassFunction,
    methods: Iterable[MethodTag] | None = None,
    vertex_cap: int | None = None,
) -> list[AuxCandidate]:
    """
    Closed-form constructions, permutation characters and polytope vertices, in tag order

    Constructions that are undefined for chi and vertex enumeration beyond the cap are skipped.
    """
    wanted = set(MethodTag) if methods is None else set(methods)
    candidates: list[AuxCandidate] = []
    for method in AuxMethod:
        if METHOD_TAGS[method] not in wanted:
            continue
        try:
            candidates.append(build_aux(table, chi, method))
        except AuxConstructionError as e:
            logger.debug(f"{table.group_name}: skipping {method.value} candidate: {e}")
    if MethodTag.PERMUTATION in wanted:
        candidates.extend(AuxCandidate(phi=row.values, method_tag=MethodTag.PERMUTATION, source=f"phi{row.label}") for row in table.perm_chars)
    if MethodTag.VERTEX in wanted:
        try:
            candidates.extend(vertex_candidates(table, enumerate_vertices(table, vertex_cap)))
        except (VertexCapExceeded, AuxConstructionError) as e:
            logger.warning(f"{table.group_name}: vertex candidates excluded: {e}")
    return candidates


def _bracketed(table: CharacterTable, chi: ClassFunction, candidates: list[AuxCandidate]) -> list[tuple[AuxCandidate, ExponentBracket]]:
    usable = []
    for cand in candidates:
        try:
            usable.append((cand, exponent_bracket(table, chi, cand.phi)))
        except BracketError as e:
            logger.debug(f"{table.group_name}: dropping candidate {cand.source}: {e}")
    return usable


def _best(evaluations: list[CandidateEvaluation], tol: float) -> tuple[int, tuple[str, ...]]:
    # evaluations arrive in tag order, so the first maximum wins ties
    best = 0
    for position, evaluation in enumerate(evaluations):
        if evaluation.value > evaluations[best].value + tol:
            best = position
    achievers = tuple(e.source for e in evaluations if e.value >= evaluations[best].value - tol)
    return best, achievers


def _cross_check(table: CharacterTable, chi: ClassFunction, evaluations: list[CandidateEvaluation]) -> None:
    closed_forms = {method.value: method for method in AuxMethod}
    for evaluation in evaluations:
        method = closed_forms.get(evaluation.source)
        if method is None or evaluation.method_tag != METHOD_TAGS[method]:
            continue
        expected = closed_form_bound(table, chi, evaluation.conj_label, method)
        if not math.isclose(expected, evaluation.walp_value, rel_tol=1e-6):
            logger.warning(f"{table.group_name} {evaluation.source} at {evaluation.conj_label}: closed form {expected:.9f} != general {evaluation.walp_value:.9f}")
        else:
            logger.debug(f"{table.group_name} {evaluation.source} at {evaluation.conj_label}: closed form agrees ({expected:.9f})")


def search_bound(
    table: CharacterTable,
    char_label: str,
    candidates: list[AuxCandidate] | None = None,
    vertex_cap: int | None = None,
    *,
    conj_label: str | None = None,
    methods: Iterable[MethodTag] | None = None,
    debug: bool = False,
) -> BoundReport:
    """
    Best bound over auxiliary candidates, minimized over the classes of complex conjugation

    For each admissible class c the maximum over candidates is taken; ties within
    TIE_TOLERANCE go to the smaller method tag. The reported value is the minimum over c, with
    ties going to the class of larger element order.

    Args:
        table: Character table
        char_label: Faithful rational irreducible character
        candidates: Override for the candidate set, in tag order
        vertex_cap: Cap for vertex enumeration, VERTEX_CAP by default
        conj_label: Restrict to one class of complex conjugation
        methods: Restrict the default candidate set to these tags
        debug: Cross-check closed-form constructions against the general evaluation

    Returns:
        BoundReport with the full audit list

    Raises:
        AuxConstructionError: If chi is not faithful or no candidate is usable
    """
    settings = get_settings()
    chi = table.char(char_label)
    if not is_faithful(table, chi):
        raise AuxConstructionError(f"{table.group_name}: character {char_label} is not faithful")
    mode = exponent_mode(table)
    tol = settings.TIE_TOLERANCE

    with logfire.span("search bound for {group} {char}", group=table.group_name, char=char_label):
        pool = default_candidates(table, chi, methods, vertex_cap) if candidates is None else candidates
        usable = _bracketed(table, chi, pool)
        if not usable:
            raise AuxConstructionError(f"{table.group_name} {char_label}: no usable auxiliary candidate")

        labels = [conj_label] if conj_label is not None else conjugation_classes(table)
        indices = [table.class_index(label) for label in labels]
        # classes on which every candidate takes the same value give the same bound
        groups: dict[tuple[Fraction, ...], list[int]] = {}
        for index in indices:
            groups.setdefault(tuple(cand.phi[index] for cand, _ in usable), []).append(index)
        members = list(groups.values())
        representatives = [group[0] for group in members]

        def evaluate_all(item: tuple[AuxCandidate, ExponentBracket]) -> list[CandidateEvaluation]:
            cand, bracket = item
            return [_evaluate(table, index, cand, bracket, mode) for index in representatives]

        with ThreadPoolExecutor(max_workers=settings.ARTIN_FLOOR_THREADS) as executor:
            results = list(executor.map(evaluate_all, usable))

        audit: list[CandidateEvaluation] = []
        per_class: dict[int, tuple[CandidateEvaluation, AuxCandidate, tuple[str, ...]]] = {}
        for position, group in enumerate(members):
            column = [row[position] for row in results]
            if debug:
                _cross_check(table, chi, column)
            best, achievers = _best(column, tol)
            for index in group:
                label = table.classes[index].label
                per_class[index] = (column[best].model_copy(update={"conj_label": label}), usable[best][0], achievers)
                audit.extend(e.model_copy(update={"conj_label": label}) for e in column)

        order = sorted(indices, key=lambda i: (-table.classes[i].element_order, i))
        chosen = order[0]
        for index in order[1:]:
            if per_class[index][0].value < per_class[chosen][0].value - tol:
                chosen = index
        winner, best_cand, achievers = per_class[chosen]
        report = BoundReport(
            query=GaloisTypeQuery(table=table, char_label=char_label, conj_label=winner.conj_label),
            value=winner.value,
            best=best_cand,
            conj_label=winner.conj_label,
            exponent_used=winner.exponent,
            exponent_mode=mode,
            improved_by_tw=mode == ExponentMode.ALPHA_TW and winner.value > winner.walp_value + tol,
            per_conjugation={table.classes[i].label: per_class[i][0].value for i in indices},
            achievers=achievers,
            all_evaluated=audit,
        )
        logfire.info("{group} {char}: bound {value} tag {tag}", group=table.group_name, char=char_label, value=report.value, tag=report.tag)
    logger.info(f"{table.group_name} {char_label}: bound {report.value:.6f}_{report.tag} at c={report.conj_label}")
    return report
