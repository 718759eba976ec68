"""
Tests for incidence configurations and the sixteen lines of a quartic del Pezzo surface
"""

import numpy as np
import pytest

from core.configs import (
    KUMMER_A_LABELS, KUMMER_B_LABELS, IncidenceStructure, abstract_kummer, cremona_richmond, degenerate_16_6,
    diagram_8_4, dp4_line_graph, goepel_enumerate, is_isomorphic, is_symmetric_config, isomorphism,
    nondegenerate_16_6, rosenhain_enumerate, rosenhain_family_report, rosenhain_union, symplectic_counts,
    symplectic_f2_4, synthemes,
)


@pytest.fixture(scope="module")
def lines():
    return dp4_line_graph()


class TestKummerConfiguration:
    """Test the abstract Kummer (16_6)"""

    def test_symmetric(self):
        """Test every row and column has six incidences"""
        kummer = abstract_kummer()
        assert kummer.shape == (16, 16)
        assert is_symmetric_config(kummer, 6)

    def test_non_degenerate(self):
        """Test two columns share exactly two rows"""
        assert nondegenerate_16_6(abstract_kummer())

    def test_cubic_row(self):
        """Test E0 meets the six singletons only"""
        assert abstract_kummer().neighbours_of_a("E0") == ["E1", "E2", "E3", "E4", "E5", "E6"]

    def test_duad_row(self):
        """Test E12 meets E1, E2 and the partitions keeping 1 and 2 together"""
        assert abstract_kummer().neighbours_of_a("E12") == ["E1", "E2", "E123", "E124", "E125", "E345"]

    def test_labels(self):
        """Test the sixteen labels per side"""
        assert len(KUMMER_A_LABELS) == 16 and len(set(KUMMER_A_LABELS)) == 16
        assert len(KUMMER_B_LABELS) == 16 and len(set(KUMMER_B_LABELS)) == 16

    def test_degenerate_example(self):
        """Test a (16_6) that fails non-degeneracy and is not Kummer"""
        other = degenerate_16_6()
        assert is_symmetric_config(other, 6)
        assert not nondegenerate_16_6(other)
        assert not is_isomorphic(abstract_kummer(), other)


class TestIsomorphism:
    """Test the isomorphism search"""

    def test_relabelled_copy(self, rng):
        """Test a row and column shuffle is found and undone"""
        kummer = abstract_kummer()
        rows = rng.permutation(16)
        cols = rng.permutation(16)
        shuffled = IncidenceStructure(
            tuple(f"r{i}" for i in range(16)), tuple(f"c{i}" for i in range(16)), kummer.matrix[rows][:, cols])
        found = isomorphism(kummer, shuffled)
        assert found is not None
        row_map, col_map = found
        assert np.array_equal(kummer.matrix, shuffled.matrix[np.ix_(row_map, col_map)])

    def test_signature_is_invariant(self, rng):
        """Test the refinement signature ignores labels and order"""
        kummer = abstract_kummer()
        rows, cols = rng.permutation(16), rng.permutation(16)
        shuffled = IncidenceStructure(
            tuple(f"r{i}" for i in range(16)), tuple(f"c{i}" for i in range(16)), kummer.matrix[rows][:, cols])
        assert shuffled.signature() == kummer.signature()

    def test_shape_mismatch(self):
        """Test structures of different shape are not isomorphic"""
        assert not is_isomorphic(abstract_kummer(), cremona_richmond())

    def test_bad_matrix(self):
        """Test entries other than 0/1 are rejected"""
        with pytest.raises(ValueError):
            IncidenceStructure(("a",), ("b",), np.array([[2]]))


class TestSixteenLines:
    """Test the line graph of the quartic del Pezzo surface"""

    def test_each_line_meets_five(self, lines):
        """Test the intersection graph is 5-regular"""
        assert np.all((lines.gram == 1).sum(axis=1) == 5)
        assert np.all(np.diag(lines.gram) == -1)

    def test_rosenhain_pairs(self, lines):
        """Test there are 20 Rosenhain pairs"""
        assert len(rosenhain_enumerate(lines)) == 20

    def test_rosenhain_pairs_unordered(self, lines):
        """Test each pair is listed once whichever tetrad comes first"""
        pairs = rosenhain_enumerate(lines)
        keys = {frozenset(pair) for pair in pairs}
        assert len(keys) == len(pairs)
        assert all(not (t1 & t2) for t1, t2 in pairs)
        assert rosenhain_enumerate(lines) == pairs

    def test_printed_families(self, lines):
        """Test the first family is valid and the second needs its corrected reading"""
        report = rosenhain_family_report(lines, rosenhain_enumerate(lines))
        assert report["first"] == {"listed": 10, "found": 10, "independent": 10}
        assert report["second_corrected"]["found"] == 10
        assert report["second_printed"]["found"] < 10

    def test_goepel_tetrads(self, lines):
        """Test there are 30 Göpel tetrads of pairwise skew lines"""
        tetrads = goepel_enumerate(lines)
        assert len(tetrads) == 30
        assert all(lines.independent(t) for t in tetrads)

    def test_rosenhain_union_is_diagram(self, lines):
        """Test one Rosenhain pair with its tropes is the (8_4) diagram"""
        pair = rosenhain_enumerate(lines)[0]
        assert is_isomorphic(rosenhain_union(lines, pair), diagram_8_4())


class TestSmallConfigurations:
    """Test the symplectic and six-point configurations"""

    def test_symplectic_counts(self):
        """Test 35 planes split 15/20 with 60/80 translates"""
        counts = symplectic_counts(symplectic_f2_4())
        assert (counts.planes, counts.isotropic, counts.non_isotropic) == (35, 15, 20)
        assert (counts.isotropic_cosets, counts.non_isotropic_cosets) == (60, 80)

    def test_synthemes(self):
        """Test there are fifteen synthemes, each a partition into duads"""
        found = synthemes()
        assert len(found) == 15
        for s in found:
            assert sorted(x for d in s for x in d) == [1, 2, 3, 4, 5, 6]

    def test_cremona_richmond(self):
        """Test duads and synthemes form a (15_3)"""
        assert is_symmetric_config(cremona_richmond(), 3)

    def test_diagram_8_4(self):
        """Test the diagram has four incidences per node and trope"""
        assert is_symmetric_config(diagram_8_4(), 4)
