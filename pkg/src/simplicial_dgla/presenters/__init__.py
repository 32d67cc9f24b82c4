"""
Presentation layer for simplicial-dgla.

This module contains presenters responsible for formatting and displaying
reports in the terminal.
"""

from simplicial_dgla.presenters.report_presenter import ReportPresenter

__all__ = ["ReportPresenter"]
