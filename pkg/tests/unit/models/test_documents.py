"""
Unit tests for input document schemas.
"""

import pytest
from pydantic import ValidationError

from simplicial_dgla.models.documents import (
    ChainComplexDocument,
    CrossedModuleDocument,
    LieAlgebraDocument,
    input_adapter,
)


def _crossed_module(delta1):
    return {
        "kind": "crossed_module",
        "d_algebra": {"dim": 1},
        "h_algebra": {"dim": 1},
        "delta1": delta1,
    }


class TestScalars:
    """Test canonicalization of exact scalars in documents."""

    def test_fraction_is_reduced(self):
        """Test that "2/4" is stored as "1/2"."""
        doc = input_adapter.validate_python(_crossed_module([["2/4"]]))
        assert doc.delta1 == [["1/2"]]

    def test_integers_become_strings(self):
        """Test that integer entries are stored as text."""
        doc = input_adapter.validate_python(_crossed_module([[3]]))
        assert doc.delta1 == [["3"]]

    @pytest.mark.parametrize("value", ["1/0", 0.5, True, "x", None])
    def test_bad_scalars_are_rejected(self, value):
        """Test that zero denominators, floats, bools and junk are rejected."""
        with pytest.raises(ValidationError):
            input_adapter.validate_python(_crossed_module([[value]]))


class TestInputDocuments:
    """Test the discriminated input union."""

    def test_kind_selects_the_model(self):
        """Test that the kind field picks the document class."""
        doc = input_adapter.validate_python(_crossed_module([["1"]]))
        assert isinstance(doc, CrossedModuleDocument)
        assert doc.options.truncation is None

        chain = input_adapter.validate_python({"kind": "chain_complex", "dims": [1]})
        assert isinstance(chain, ChainComplexDocument)

    def test_unknown_kind_is_rejected(self):
        """Test that an unknown kind fails validation."""
        with pytest.raises(ValidationError):
            input_adapter.validate_python({"kind": "group", "dims": [1]})

    def test_extra_fields_are_rejected(self):
        """Test that misspelled fields are not silently ignored."""
        data = _crossed_module([["1"]])
        data["delta_1"] = [["1"]]
        with pytest.raises(ValidationError):
            input_adapter.validate_python(data)

    def test_truncation_must_be_positive(self):
        """Test that options.truncation is at least one."""
        data = _crossed_module([["1"]])
        data["options"] = {"truncation": 0}
        with pytest.raises(ValidationError):
            input_adapter.validate_python(data)

    def test_negative_dimension_is_rejected(self):
        """Test that Lie algebra dimensions are non-negative."""
        with pytest.raises(ValidationError):
            LieAlgebraDocument(dim=-1)
