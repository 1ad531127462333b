# tests/test_tuning.py

import pytest
from pydantic import ValidationError

from services.angle_service import Angle
from services.surgery import TuningWord, effective_angles, tune_angle, tune_config

BASILICA = TuningWord(word0="01", word1="10")


@pytest.mark.parametrize("word0, word1", [("10", "01"), ("0", "10"), ("0a", "10"), ("", "1")])
def test_invalid_words(word0, word1):
    with pytest.raises(ValidationError):
        TuningWord(word0=word0, word1=word1)


def test_tune_angle():
    assert tune_angle(BASILICA, "1/3") == Angle.parse("2/5")
    assert tune_angle(BASILICA, "11/56") == Angle.parse("1423/4032")
    identity = TuningWord(word0="0", word1="1")
    assert tune_angle(identity, "11/56") == Angle.parse("11/56")


def test_then():
    twice = BASILICA.then(BASILICA)
    assert (twice.word0, twice.word1) == ("0110", "1001")
    assert twice.period == 4
    assert tune_angle(twice, "1/3") == tune_angle(BASILICA, tune_angle(BASILICA, "1/3"))


def test_tune_config(fig2_cfg, fig2_tuned_angles):
    tuned = tune_config(BASILICA, fig2_cfg)
    assert tuple(str(t) for t in tuned.theta) == fig2_tuned_angles
    assert (tuned.k_v, tuned.k_w, tuned.k_tilde_v, tuned.k_tilde_w) == (14, 8, 8, 14)


def test_effective_angles(fig2_cfg, fig2_tuned_angles):
    data = fig2_cfg.as_dict()
    assert effective_angles(data) == list(fig2_cfg.theta)
    tuned = effective_angles({**data, "tuning_word0": "01", "tuning_word1": "10"})
    assert tuple(str(t) for t in tuned) == fig2_tuned_angles
