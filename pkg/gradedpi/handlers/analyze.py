from arclet.alconna import Args, Option

from ..algebra.grading import (
    ElementaryGrading,
    canonical_form,
    difference_profile,
    is_isomorphic,
    is_strong,
    is_weakly_isomorphic,
    one_dimensional_components,
    reduce_distinct,
)
from ..algebra.group import GroupDescriptor
from ..algebra.pattern import PatternMatrix
from ..errors import GradedPIError
from ..search.classification import canonical_z_criteria, equiv_canonical_Z
from ..search.enumeration import (
    coarsening_hypotheses,
    is_almost_nondegenerate,
    is_nondegenerate,
    length_two_identities,
)
from ..search.models import (
    AnalyzeReport,
    ChecksModel,
    CoarseningModel,
    ComparisonModel,
    DifferenceProfileModel,
    GradingModel,
    word_json,
)
from ..utils.operation import OpInfo, OpIt
from .shared import (
    Command,
    HandlerResult,
    alc,
    common_options,
    handler,
    maybe_write_dot,
    tuple_options,
)

alc.subcommand(
    "analyze",
    *tuple_options(),
    Option(
        "--compare",
        Args["compare", str],
        help_text="Second tuple over the same group, tested for (weak) isomorphism",
    ),
    *common_options(),
    help_text="Structure of a grading: support, components, degeneracy, checks",
)


def structural_checks(grading: ElementaryGrading) -> OpInfo[str]:
    op = OpInfo[str]()
    n = grading.n
    zero = grading.descriptor.zero
    support = grading.support_order

    op.check("support contains 0", zero in grading.support)
    op.check(
        "components partition the n x n positions",
        sum(grading.dim(g) for g in support) == n * n,
    )
    op.check(
        "dim R_g = dim R_-g",
        all(grading.dim(g) == grading.dim(-g) for g in support),
    )
    op.check(
        "M_g transposed is M_-g",
        all(grading.patterns[g].transpose() == grading.patterns[-g] for g in support),
    )
    op.check(
        "dim R_0 = n iff entries are distinct",
        (grading.dim(zero) == n) == grading.distinct_entries,
    )
    if grading.distinct_entries:
        op.check(
            "M_0 is the identity pattern",
            grading.patterns[zero] == PatternMatrix.identity(n),
        )
    else:
        op.skipped.append(OpIt("M_0 is the identity pattern", "entries repeat"))

    reduced = reduce_distinct(grading)
    if not grading.descriptor.torsion_free():
        op.skipped.append(OpIt("canonical Z criteria agree", "group has torsion"))
    else:
        criteria = canonical_z_criteria(reduced)
        op.check("canonical Z criteria agree", criteria.coherent, str(criteria._asdict()))

    hypotheses = coarsening_hypotheses(reduced)
    if reduced.descriptor != GroupDescriptor(1):
        op.skipped.append(OpIt("coarsening hypotheses give a palindromic profile", "not Z"))
    elif not hypotheses.hold:
        op.skipped.append(
            OpIt("coarsening hypotheses give a palindromic profile", "hypotheses fail"),
        )
    else:
        op.check(
            "coarsening hypotheses give a palindromic profile",
            difference_profile(reduced).palindromic,
        )
    return op


def checks_model(op: OpInfo[str]) -> ChecksModel:
    return ChecksModel(
        passed=[it.value for it in op.succeed],
        failed=[it.value for it in op.failed],
        skipped=[it.value for it in op.skipped],
    )


def comparison_model(grading: ElementaryGrading, cmd: Command) -> ComparisonModel | None:
    if (other := cmd.compare_tuple()) is None:
        return None
    try:
        weak = is_weakly_isomorphic(grading.tuple, other)
    except GradedPIError:
        # automorphisms are only listed for Z and Z_m
        weak = None
    return ComparisonModel(
        tuple_=other.to_json(),
        isomorphic=is_isomorphic(grading.tuple, other),
        weakly_isomorphic=weak,
    )


@handler("analyze")
def _(cmd: Command) -> HandlerResult:
    grading = cmd.grading()
    maybe_write_dot(cmd, grading)
    reduced = reduce_distinct(grading)
    ordered_groups = grading.descriptor.torsion_free()

    profile = difference_profile(reduced) if ordered_groups else None
    almost = is_almost_nondegenerate(grading)
    nondeg = is_nondegenerate(grading)
    hypotheses = coarsening_hypotheses(reduced)
    checks = structural_checks(grading)

    report = AnalyzeReport(
        grading=GradingModel.of(grading),
        n=grading.n,
        distinct_entries=grading.distinct_entries,
        support=[g.to_json() for g in grading.support_order],
        components={str(g): [list(p) for p in grading.component(g)] for g in grading.support_order},
        dimensions={str(g): grading.dim(g) for g in grading.support_order},
        canonical_form=canonical_form(grading.tuple).to_json(),
        difference_profile=(
            DifferenceProfileModel(
                steps=[d.to_json() for d in profile.steps],
                palindromic=profile.palindromic,
            )
            if profile
            else None
        ),
        equiv_canonical_Z=equiv_canonical_Z(reduced) if ordered_groups else None,
        strong=is_strong(grading),
        almost_nondegenerate=almost.value,
        almost_witness=word_json(almost.witness),
        nondegenerate=nondeg.value,
        nondegenerate_reason=nondeg.reason,
        nondegenerate_witness=word_json(nondeg.witness),
        coarsening=CoarseningModel(
            one_dimensional=[g.to_json() for g in one_dimensional_components(grading)],
            length_two_identities=[w.to_json() for w in length_two_identities(reduced)],
            hypotheses_hold=hypotheses.hold,
            model_coarsening=profile.palindromic if profile else None,
        ),
        checks=checks_model(checks),
        comparison=comparison_model(grading, cmd),
    )
    return HandlerResult(report, failed=bool(checks.failed))
