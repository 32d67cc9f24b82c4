"""
Base gateway interface for reading input documents and writing results.

Services never touch files or JSON; they receive domain objects produced
by a gateway and hand back domain objects for it to serialize.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from simplicial_dgla.models.documents import InputDocument, OutputDocument
from simplicial_dgla.models.dgla import DGLA
from simplicial_dgla.models.presentations import (
    ChainComplexSpec,
    CrossedModuleSpec,
    ModuleComplexSpec,
    TwoCrossedModuleSpec,
)
from simplicial_dgla.models.simplicial import SimplicialLieAlgebra

Source = Union[
    SimplicialLieAlgebra,
    CrossedModuleSpec,
    TwoCrossedModuleSpec,
    ChainComplexSpec,
    ModuleComplexSpec,
]


@dataclass(frozen=True)
class LoadedDocument:
    """
    A parsed input document with the hash of its bytes.

    Attributes:
        document: Validated input document
        sha256: Hex digest of the raw input bytes
    """

    document: InputDocument
    sha256: str

    @property
    def kind(self) -> str:
        """Input kind, e.g. "crossed_module"."""
        return self.document.kind


class IDocumentGateway(ABC):
    """
    Abstract interface for document gateways.

    Design Principles:
    - Dependency Inversion: the CLI depends on this interface, not on JSON
    - Single Responsibility: only parsing, conversion and serialization

    Implementation Guidelines:
    - Reject malformed input with DocumentParseError, never with a bare exception
    - Keep output deterministic: identical input bytes give identical output bytes
    """

    @abstractmethod
    def read(self, path: Path) -> LoadedDocument:
        """
        Read and validate an input document.

        Raises:
            DocumentParseError: If the file cannot be read or does not match the schema
        """
        pass

    @abstractmethod
    def to_source(self, loaded: LoadedDocument) -> Source:
        """
        Convert an input document to a presentation or a simplicial Lie algebra.

        Raises:
            DocumentParseError: If array shapes do not match the declared dimensions
            InvalidPresentationError: If structure constants do not define Lie algebras
        """
        pass

    @abstractmethod
    def read_dgla(self, path: Path) -> tuple[DGLA, str]:
        """
        Read the DGLA section of a previously written output document.

        Returns:
            The DGLA and the SHA-256 of the document bytes

        Raises:
            DocumentParseError: If the file has no usable DGLA section
        """
        pass

    @abstractmethod
    def dumps(self, output: OutputDocument) -> str:
        """Serialize an output document."""
        pass

    @abstractmethod
    def input_schema(self) -> dict[str, object]:
        """JSON schema of the input document."""
        pass


class DocumentParseError(Exception):
    """
    Raised when an input or output document cannot be used.

    Covers unreadable files, invalid JSON, schema violations, malformed
    rationals such as "1/0" and array shapes that contradict the declared
    dimensions.
    """

    pass
