import io
import json
import numpy as np

from fractions import Fraction
from zx_axiom_verifier.util import task_rng, progress_bar, to_json


def test_task_rng_depends_only_on_its_key():
    first = task_rng(5, 'S1/exact', 3).integers(0, 2 ** 32, size=4)
    again = task_rng(5, 'S1/exact', 3).integers(0, 2 ** 32, size=4)

    assert np.array_equal(first, again)
    assert not np.array_equal(first, task_rng(5, 'S1/exact', 4).integers(0, 2 ** 32, size=4))
    assert not np.array_equal(first, task_rng(5, 'S2/exact', 3).integers(0, 2 ** 32, size=4))
    assert not np.array_equal(first, task_rng(6, 'S1/exact', 3).integers(0, 2 ** 32, size=4))


def test_task_rng_accepts_negative_seeds():
    assert task_rng(-1, 'label').random() == task_rng(2 ** 64 - 1, 'label').random()


def test_progress_bar_is_silent_without_a_terminal(monkeypatch):
    stream = io.StringIO()
    monkeypatch.setattr('sys.stderr', stream)

    progress_bar(5, 10, suffix='rules')
    assert stream.getvalue() == ''


class _Terminal(io.StringIO):
    def isatty(self):
        return True


def test_progress_bar_draws_on_a_terminal(monkeypatch):
    stream = _Terminal()
    monkeypatch.setattr('sys.stderr', stream)

    progress_bar(10, 10, suffix='rules')

    assert stream.getvalue().startswith('[' + '=' * 49 + '>]')
    assert '] 100.0% ' in stream.getvalue()
    assert stream.getvalue().endswith(' ... rules\r\n')


def test_to_json_is_sorted_and_versioned():
    document = to_json({'b': Fraction(1, 3), 'a': np.int64(2), 'c': [np.float64(0.5), np.bool_(True), 1j]})

    assert json.loads(document) == {'schema': 1, 'a': 2, 'b': '1/3', 'c': [0.5, True, [0.0, 1.0]]}
    assert document.index('"a"') < document.index('"b"') < document.index('"schema"')
