import json
import random

import pytest
from hypothesis import given, strategies as st

import argcoach as ac
from argcoach.errors import InvalidSignal, MandatoryElement, SessionFinished
from argcoach.model import ELEMENT_ORDER, CompletenessStatus, ElementKind
from argcoach.wizard import Signal
from conftest import KEEN

K = ElementKind


def load_script():
    return json.loads((KEEN / "wizard_script.json").read_text(encoding="utf-8"))


def run_script(session, steps):
    for step in steps:
        if "signal" in step:
            session = ac.apply_answer(session, Signal(step["signal"]))
        else:
            session = ac.apply_answer(session, step["answer"])
    return session


class TestStartSession:
    def test_empty_draft_starts_at_claim(self):
        session = ac.start_session(ac.new_draft("c", "u", "en"))
        assert session.cursor is K.CLAIM
        assert not session.finished

    def test_claim_only_resumes_at_ground(self):
        draft = ac.set_element(ac.new_draft("c", "u", "en"), K.CLAIM, None, "x")
        session = ac.start_session(draft)
        assert session.cursor is K.GROUND
        assert session.grounds_open

    def test_full_draft_is_finished(self):
        draft = ac.new_draft("c", "u", "en")
        for kind in ELEMENT_ORDER:
            draft = ac.set_element(draft, kind, None, f"{kind.value} text")
        session = ac.start_session(draft)
        assert session.finished
        assert ac.next_prompt(session) is None


class TestPrompts:
    def test_claim_prompt_en(self):
        session = ac.start_session(ac.new_draft("c", "u", "en"))
        prompt = ac.next_prompt(session)
        assert prompt.target is K.CLAIM
        assert prompt.question == "What are you trying to prove?"

    def test_warrant_prompt_en(self):
        draft = ac.set_element(ac.new_draft("c", "u", "en"), K.CLAIM, None, "x")
        draft = ac.set_element(draft, K.GROUND, None, "g")
        session = ac.start_session(draft)  # resumes at warrant
        prompt = ac.next_prompt(session)
        assert prompt.target is K.WARRANT
        assert prompt.question == "Why do you have those assumptions?"

    def test_prompt_targets_cursor_everywhere(self):
        session = ac.start_session(ac.new_draft("c", "u", "pt-BR"))
        while not session.finished:
            prompt = ac.next_prompt(session)
            assert prompt.target is session.cursor
            assert prompt.question
            session = ac.apply_answer(
                session,
                Signal.NO_MORE_GROUNDS if (
                    session.cursor is K.GROUND and session.draft.grounds
                ) else f"resp {session.cursor.value}",
            )


class TestApplyAnswer:
    def test_claim_answer_moves_to_ground(self):
        session = ac.start_session(ac.new_draft("c", "u", "en"))
        session = ac.apply_answer(session, "The sentence must be confirmed.")
        assert session.cursor is K.GROUND
        assert session.grounds_open

    def test_grounds_stay_open_until_signal(self):
        session = ac.start_session(ac.new_draft("c", "u", "en"))
        session = ac.apply_answer(session, "claim")
        for n in range(4):
            session = ac.apply_answer(session, f"ground {n}")
            assert session.cursor is K.GROUND
        session = ac.apply_answer(session, Signal.NO_MORE_GROUNDS)
        assert session.cursor is K.WARRANT
        assert not session.grounds_open

    def test_skip_on_claim_is_mandatory(self):
        session = ac.start_session(ac.new_draft("c", "u", "en"))
        with pytest.raises(MandatoryElement):
            ac.apply_answer(session, Signal.SKIP)

    def test_no_more_grounds_with_zero_grounds(self):
        session = ac.start_session(ac.new_draft("c", "u", "en"))
        session = ac.apply_answer(session, "claim")
        with pytest.raises(MandatoryElement):
            ac.apply_answer(session, Signal.NO_MORE_GROUNDS)

    def test_no_more_grounds_off_ground_cursor(self):
        session = ac.start_session(ac.new_draft("c", "u", "en"))
        with pytest.raises(InvalidSignal):
            ac.apply_answer(session, Signal.NO_MORE_GROUNDS)

    def test_answer_after_finished(self):
        draft = ac.new_draft("c", "u", "en")
        for kind in ELEMENT_ORDER:
            draft = ac.set_element(draft, kind, None, f"{kind.value} text")
        session = ac.start_session(draft)
        with pytest.raises(SessionFinished):
            ac.apply_answer(session, "late")

    def test_skipped_kinds_recorded(self):
        session = ac.start_session(ac.new_draft("c", "u", "en"))
        session = ac.apply_answer(session, "claim")
        session = ac.apply_answer(session, "g")
        session = ac.apply_answer(session, Signal.NO_MORE_GROUNDS)
        session = ac.apply_answer(session, Signal.SKIP)  # warrant
        session = ac.apply_answer(session, "backing")
        session = ac.apply_answer(session, Signal.SKIP)  # qualifier
        session = ac.apply_answer(session, Signal.SKIP)  # rebuttal
        assert session.finished
        assert session.skipped == (K.WARRANT, K.QUALIFIER, K.REBUTTAL)


class TestKeenScript:
    def test_replay_reaches_grounded(self):
        script = load_script()
        session = ac.start_session(ac.new_draft("case", "keen", script["locale"]))
        session = run_script(session, script["steps"])
        assert session.finished
        assert ac.completeness(session.draft) is CompletenessStatus.GROUNDED
        assert ac.structural_issues(session.draft) == []

    def test_replay_deterministic(self):
        script = load_script()
        finals = []
        for _ in range(2):
            session = ac.start_session(ac.new_draft("case", "keen", script["locale"]))
            finals.append(run_script(session, script["steps"]).draft)
        assert finals[0].same_content(finals[1])


# --- properties over random legal answer sequences ---

def random_legal_walk(seed: int):
    """Drive a fresh session with random legal answers; returns the session
    and the texts applied per kind."""
    rng = random.Random(seed)
    session = ac.start_session(ac.new_draft("c", "u", "en"))
    applied: dict[K, list[str]] = {kind: [] for kind in ELEMENT_ORDER}
    steps = 0
    while not session.finished:
        steps += 1
        cursor = session.cursor
        if cursor is K.GROUND:
            if session.draft.grounds and rng.random() < 0.4:
                session = ac.apply_answer(session, Signal.NO_MORE_GROUNDS)
                continue
            text = f"ground-{len(session.draft.grounds) + 1}-{rng.randrange(999)}"
            session = ac.apply_answer(session, text)
            applied[cursor].append(text)
        elif cursor in (K.WARRANT, K.BACKING, K.QUALIFIER, K.REBUTTAL) and rng.random() < 0.3:
            session = ac.apply_answer(session, Signal.SKIP)
        else:
            text = f"{cursor.value}-{rng.randrange(999)}"
            session = ac.apply_answer(session, text)
            applied[cursor].append(text)
    return session, applied, steps


@given(st.integers(min_value=0, max_value=10_000))
def test_filled_slots_equal_nonskip_answers(seed):
    session, applied, _ = random_legal_walk(seed)
    draft = session.draft
    assert list(draft.grounds) == applied[K.GROUND]
    for kind in (K.CLAIM, K.WARRANT, K.BACKING, K.QUALIFIER, K.REBUTTAL):
        expected = applied[kind][-1] if applied[kind] else None
        assert draft.single_slot(kind) == expected


@given(st.integers(min_value=0, max_value=10_000))
def test_session_terminates_within_bound(seed):
    session, applied, steps = random_legal_walk(seed)
    assert session.finished
    # five single-slot answers or skips, one answer per ground, one close signal
    assert steps <= 5 + len(session.draft.grounds) + 1
