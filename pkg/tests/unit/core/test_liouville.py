import numpy as np
import pytest

from noneq_spectra.core.liouville import LiouvilleIndex
from noneq_spectra.core.units import HBAR_EV_FS, fs_to_inverse_ev, inverse_ev_to_fs
from noneq_spectra.errors.base import ArgumentError, LabelError


def test_liouville_index_order_sanity():
    # Arrange & Act
    index = LiouvilleIndex(("a", "b", "c"))

    # Assert
    assert index.pairs == (
        ("a", "a"),
        ("b", "b"),
        ("c", "c"),
        ("a", "b"),
        ("b", "a"),
        ("a", "c"),
        ("c", "a"),
        ("b", "c"),
        ("c", "b"),
    )
    assert index.size == 9
    assert index.flat("c", "a") == 6
    assert index.pair(3) == ("a", "b")
    assert list(index.population_indices()) == [0, 1, 2]


def test_liouville_index_vectorize_sanity():
    # Arrange
    index = LiouvilleIndex(("a", "b", "c"))
    matrix = np.arange(9, dtype=complex).reshape(3, 3) * (1 + 1j)

    # Act
    vector = index.vectorize(matrix)

    # Assert
    assert vector[index.flat("b", "c")] == matrix[1, 2]
    assert np.array_equal(index.matrix(vector), matrix)


def test_liouville_index_conjugate_permutation_sanity():
    # Arrange
    index = LiouvilleIndex(("a", "b", "c"))

    # Act
    permutation = index.conjugate_permutation()

    # Assert
    assert permutation[index.flat("a", "b")] == index.flat("b", "a")
    assert permutation[index.flat("c", "c")] == index.flat("c", "c")
    assert np.array_equal(permutation[permutation], np.arange(9))


def test_liouville_index_out_of_range_edge_case():
    # Arrange
    index = LiouvilleIndex(("a", "b"))

    # Act & Assert
    with pytest.raises(ArgumentError):
        index.pair(4)
    with pytest.raises(LabelError):
        index.flat("a", "z")


def test_unit_conversion_sanity():
    # Act & Assert
    assert fs_to_inverse_ev(HBAR_EV_FS) == pytest.approx(1.0)
    assert inverse_ev_to_fs(fs_to_inverse_ev(6.6)) == pytest.approx(6.6)
    assert np.allclose(fs_to_inverse_ev(np.array([0.0, HBAR_EV_FS])), [0.0, 1.0])
