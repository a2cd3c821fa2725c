import pytest

from errors import ModelError, NotDominoError, ParityError, RangeError, ScaleError
from flag_enum import (SP6_TABLEAUX, Flag, domino_label, enumerate_xstable_flags,
                       full_flag_count, in_kernel_band, iota, is_isotropic, kernel_flag_set,
                       label_flags, lemma2_checks, partition_property_check, section6_suite,
                       sigma, stratum_table, syt_label)
from linalg_exact import ExactMatrix, Subspace, prime_field
from nilpotent_models import skew_adjoint_model, standard_nilpotent
from partitions import FormKind, Partition, partitions_of
from tableaux import d_n0

F3 = prime_field(3)


def _flag(vectors, field=F3):
    """Flag spanned by the first i vectors, i = 0..n."""
    n = len(vectors)
    return Flag(tuple(Subspace.span(vectors[:i], field, n) for i in range(n + 1)))


def test_full_flag_count():
    assert full_flag_count(1, 3) == 1
    assert full_flag_count(3, 3) == 52
    assert full_flag_count(2, 5) == 6


def test_zero_nilpotent_has_all_flags():
    model = standard_nilpotent(Partition.of(1, 1, 1), F3)
    flags = list(enumerate_xstable_flags(model))
    assert len(flags) == 52
    assert len(set(flags)) == 52


def test_regular_nilpotent_has_one_flag():
    model = standard_nilpotent(Partition.of(3), F3)
    flags = list(enumerate_xstable_flags(model))
    assert len(flags) == 1
    assert flags[0][1] == Subspace.kernel_of(model.x)


def test_enumeration_guards():
    with pytest.raises(ModelError):
        list(enumerate_xstable_flags(standard_nilpotent(Partition.of(2))))
    with pytest.raises(ScaleError):
        enumerate_xstable_flags(standard_nilpotent(Partition.of(2), prime_field(7)))
    with pytest.raises(ModelError):
        enumerate_xstable_flags(standard_nilpotent(Partition.of(2), F3), isotropic=True)


def test_flag_validation():
    with pytest.raises(ValueError):
        Flag((Subspace.zero(F3, 2), Subspace.whole(F3, 2)))
    a = Subspace.span([[1, 0]], F3, 2)
    b = Subspace.span([[0, 1]], F3, 2)
    flag = Flag((Subspace.zero(F3, 2), a, Subspace.whole(F3, 2)))
    assert flag.n == 2
    assert flag != Flag((Subspace.zero(F3, 2), b, Subspace.whole(F3, 2)))


def test_every_enumerated_flag_is_stable():
    model = standard_nilpotent(Partition.of(2, 1, 1), F3)
    for f in enumerate_xstable_flags(model):
        assert f.is_stable(model.x)


def test_kernel_flag_set():
    x = standard_nilpotent(Partition.of(2, 1), F3)
    flags = kernel_flag_set(x)
    assert len(flags) == 4
    kernel = Subspace.kernel_of(x.x)
    assert all(f[2] == kernel for f in flags)


def test_kernel_flags_are_stable():
    model = standard_nilpotent(Partition.of(2, 2), F3)
    for f in kernel_flag_set(model):
        assert f.is_stable(model.x)


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_syt_labels_stratify_flags(n):
    for p in partitions_of(n):
        report = partition_property_check(p, 3)
        assert report.passed, report.to_json()


@pytest.mark.slow
def test_syt_labels_stratify_flags_n5():
    for p in partitions_of(5):
        assert partition_property_check(p, 3).passed


def test_syt_label_of_regular_flag():
    model = standard_nilpotent(Partition.of(2), F3)
    (f,) = list(enumerate_xstable_flags(model))
    assert syt_label(f, model).shape == Partition.of(2)


def test_sigma_and_iota_orthogonal():
    model = skew_adjoint_model(Partition.of(2, 2), FormKind.ORTHOGONAL, F3)
    gram = model.gram
    flags = list(enumerate_xstable_flags(model))
    isotropic = set(enumerate_xstable_flags(model, isotropic=True))
    assert isotropic
    for f in flags:
        s = sigma(f, gram)
        assert sigma(s, gram) == f
        assert s.is_stable(model.x)
        assert is_isotropic(f, gram) == (f in isotropic)
    for f in isotropic:
        g = iota(f, gram, model)
        assert g != f
        assert g in isotropic
        assert iota(g, gram, model) == f


def test_iota_guards():
    odd = skew_adjoint_model(Partition.of(3), FormKind.ORTHOGONAL, F3)
    (f,) = list(enumerate_xstable_flags(odd))
    with pytest.raises(ParityError):
        iota(f, odd.gram)
    symplectic = skew_adjoint_model(Partition.of(1, 1), FormKind.SYMPLECTIC, F3)
    g = next(iter(enumerate_xstable_flags(symplectic)))
    with pytest.raises(ModelError):
        iota(g, symplectic.gram)


def test_isotropic_flags_are_sigma_fixed():
    model = skew_adjoint_model(Partition.of(2, 2, 1, 1), FormKind.SYMPLECTIC, F3)
    for f in enumerate_xstable_flags(model, isotropic=True):
        assert is_isotropic(f, model.gram)
        assert f.is_stable(model.x)


def test_non_domino_flag():
    model = standard_nilpotent(Partition.of(2, 1, 1), F3)
    f = _flag([[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]])
    assert f[3] == Subspace.kernel_of(model.x)
    assert f.is_stable(model.x)
    with pytest.raises(NotDominoError):
        domino_label(f, model)
    labeled = label_flags(model)
    assert any(item.domino is None for item in labeled)
    assert all(item.syt.shape == model.jordan for item in labeled)


def test_stratum_table_counts():
    model = standard_nilpotent(Partition.of(2, 1, 1), F3)
    labeled = label_flags(model)
    table = stratum_table([item.domino for item in labeled])
    assert table['count'].sum() == len(labeled)
    assert 'not-domino' in set(table['label'])
    assert stratum_table([]).empty


def test_in_kernel_band():
    model = standard_nilpotent(Partition.of(2, 1, 1), F3)
    inside = _flag([[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]])
    outside = _flag([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert in_kernel_band(inside, model)
    assert not in_kernel_band(outside, model)


def test_lemma2_on_small_shape():
    model = standard_nilpotent(Partition.of(2, 2, 1), F3)
    report = lemma2_checks(model, d_n0(3), 2, 0)
    assert report.passed, report.to_json()
    assert report.flags_labeled > 0
    assert report.flags_checked >= report.flags_labeled
    assert report.to_json()['verdict'] == 'verified over F_3'


@pytest.mark.slow
def test_lemma2_on_larger_shape():
    model = standard_nilpotent(Partition.of(3, 2, 2), F3)
    report = lemma2_checks(model, d_n0(3), 4, 1)
    assert report.passed, report.to_json()
    assert report.flags_labeled > 0


def test_lemma2_shape_mismatch():
    model = standard_nilpotent(Partition.of(3, 2), F3)
    with pytest.raises(RangeError):
        lemma2_checks(model, d_n0(3), 2, 0)


def test_section6_over_f3():
    report = section6_suite(3)
    assert report.passed, report.to_json()
    assert set(report.label_counts) == set(SP6_TABLEAUX)
    assert sum(report.label_counts.values()) == report.flag_count
    assert report.zset_counts['Z3_1&Z3_2'] > 0
    assert report.assertions['z2-union']
    assert report.zset_counts['Z2'] == report.zset_counts['Z2_1'] + report.zset_counts['Z2_2'] > 0
    assert report.to_json()['verdict'] == 'verified over F_3'


@pytest.mark.slow
def test_section6_over_f5():
    assert section6_suite(5).passed


def test_section6_rejects_large_field():
    with pytest.raises(ScaleError):
        section6_suite(7)


def test_flag_apply_identity():
    model = standard_nilpotent(Partition.of(2, 1), F3)
    identity = ExactMatrix.identity(3, F3)
    for f in enumerate_xstable_flags(model):
        assert f.apply(identity) == f


def test_kernel_flag_count_is_product_of_subquotient_counts():
    for p in (Partition.of(2, 1), Partition.of(2, 2), Partition.of(3, 1)):
        model = standard_nilpotent(p, F3)
        expected = 1
        for c in p.columns:
            expected *= full_flag_count(c, 3)
        assert len(kernel_flag_set(model)) == expected


def test_domino_label_is_sigma_invariant():
    model = skew_adjoint_model(Partition.of(3, 1), FormKind.ORTHOGONAL, F3)
    for f in enumerate_xstable_flags(model):
        s = sigma(f, model.gram)
        try:
            label = domino_label(f, model)
        except NotDominoError:
            with pytest.raises(NotDominoError):
                domino_label(s, model)
            continue
        assert domino_label(s, model) == label


def test_iota_preserves_domino_label():
    model = skew_adjoint_model(Partition.of(2, 2), FormKind.ORTHOGONAL, F3)
    for f in enumerate_xstable_flags(model, isotropic=True):
        assert domino_label(iota(f, model.gram, model), model) == domino_label(f, model)


@pytest.mark.slow
def test_syt_labels_stratify_flags_n6():
    for p in partitions_of(6):
        assert partition_property_check(p, 3).passed
