import json
from pathlib import Path

import pytest

import argcoach as ac
from argcoach.model import ElementKind

FIXTURES = Path(__file__).parent / "fixtures"
KEEN = FIXTURES / "keen"


def load_keen_payloads() -> dict:
    return json.loads((KEEN / "payloads.json").read_text(encoding="utf-8"))


def build_keen_draft(case_ref: str = "case-speluncean", author_ref: str = "j-keen") -> ac.ToulminDraft:
    """The golden-sample draft: claim, four grounds, warrant, backing."""
    p = load_keen_payloads()
    draft = ac.new_draft(case_ref, author_ref, p["locale"])
    draft = ac.set_element(draft, ElementKind.CLAIM, None, p["claim"])
    for i, ground in enumerate(p["grounds"], start=1):
        draft = ac.set_element(draft, ElementKind.GROUND, i, ground)
    draft = ac.set_element(draft, ElementKind.WARRANT, None, p["warrant"])
    draft = ac.set_element(draft, ElementKind.BACKING, None, p["backing"])
    return draft


@pytest.fixture
def bundle():
    return ac.default_bundle()


@pytest.fixture
def en_template(bundle):
    return bundle.template("en")


@pytest.fixture
def keen_draft():
    return build_keen_draft()


# One pass/fail line per acceptance criterion, printed after the run.
_acceptance_results: dict[str, str] = {}


def record_acceptance(name: str, passed: bool) -> None:
    _acceptance_results[name] = "PASS" if passed else "FAIL"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in _acceptance_results.items():
        terminalreporter.write_line(f"{status}  {name}")
