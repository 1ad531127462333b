# /services/surgery/tuning.py
# Tuning pe unghiuri: fiecare cifră 0 devine word0, fiecare cifră 1 devine word1.

import logging

from pydantic import BaseModel, ConfigDict, model_validator

from services.angle_service import Angle, AngleLike, as_angle, expansion_value, to_expansion
from services.surgery.edge_config import EdgeConfig, validate_config


class TuningWord(BaseModel):
    model_config = ConfigDict(frozen=True)

    word0: str
    word1: str

    @model_validator(mode="after")
    def _check_words(self) -> "TuningWord":
        for word in (self.word0, self.word1):
            if not word or set(word) - {"0", "1"}:
                raise ValueError(f"Cuvânt de tuning invalid: '{word}' (doar cifre 0/1).")
        if len(self.word0) != len(self.word1):
            raise ValueError("Cuvintele de tuning trebuie să aibă aceeași lungime.")
        if not self.word0 < self.word1:
            raise ValueError("word0 trebuie să fie lexicografic sub word1.")
        return self

    @property
    def period(self) -> int:
        return len(self.word0)

    def substitute(self, digits: str) -> str:
        return "".join(self.word1 if d == "1" else self.word0 for d in digits)

    def then(self, other: "TuningWord") -> "TuningWord":
        """Substituția compusă: întâi `other`, apoi self (self ∗ (other ∗ x))."""
        return TuningWord(word0=self.substitute(other.word0), word1=self.substitute(other.word1))


def tune_angle(word: TuningWord, x: AngleLike) -> Angle:
    expansion = to_expansion(as_angle(x))
    return Angle(expansion_value(word.substitute(expansion.preperiod_word), word.substitute(expansion.period_word)))


def tune_config(word: TuningWord, cfg: EdgeConfig) -> EdgeConfig:
    tuned = [tune_angle(word, t) for t in cfg.theta]
    logging.info(f"Tuning ({word.word0}, {word.word1}): {', '.join(str(t) for t in tuned)}")
    return validate_config(tuned)
