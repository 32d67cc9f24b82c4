"""
Document gateways.

This module contains the gateway interface and its JSON implementation for
reading input documents and writing output documents.
"""

from simplicial_dgla.gateways.base import DocumentParseError, IDocumentGateway, LoadedDocument
from simplicial_dgla.gateways.json_document_gateway import JsonDocumentGateway

__all__ = ["IDocumentGateway", "LoadedDocument", "DocumentParseError", "JsonDocumentGateway"]
