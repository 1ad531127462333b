# /scripts/certify_fixtures.py

import json
import sys
from pathlib import Path

# Adaugă directorul rădăcină în path pentru a putea importa modulele
ROOT = Path(__file__).resolve().parent.parent
sys.path.append(str(ROOT))

from tqdm import tqdm

from config_loader import config_loader, load_edge_config
from exceptions import SurgeryError
from services import lamination_service
from services.plane.verification import numeric_colanding
from services.surgery import config_from_mapping
from settings import settings

LAVAURS_MAX_PERIOD = 6
FIXTURES = ROOT / "tests" / "colanding_fixtures.json"
OUTPUT = ROOT / "tests" / "certified_fixtures.json"


def fixture_pairs():
    """Tripletele (sursă, θ, θ', așteptat) verificate numeric."""
    data = json.loads(FIXTURES.read_text(encoding="utf-8"))
    pairs = [("colanding_fixtures", *entry["angles"], entry["expected"]) for entry in data["colanding"]]
    pairs += [("lavaurs_partners", low, high, True) for low, high in data["lavaurs_partners"]]
    for name in config_loader.names():
        cfg = config_from_mapping(load_edge_config(name).angles())
        for low, high in zip(cfg.minus, cfg.plus):
            pairs.append((name, str(low), str(high), True))
    for leaf in lamination_service.build_lamination(LAVAURS_MAX_PERIOD).leaves:
        pairs.append((f"lavaurs_p{leaf.period}", str(leaf.low), str(leaf.high), True))
    return pairs


def main():
    """Recertifică numeric fixture-urile combinatorii și scrie tests/certified_fixtures.json."""
    pairs = fixture_pairs()
    print(f"Se certifică {len(pairs)} perechi...")

    entries = []
    failures = 0
    for source, low, high, expected in tqdm(pairs, desc="certificare", unit="pereche"):
        try:
            numeric = numeric_colanding(low, high, settings.SOLVER)
        except SurgeryError as e:
            print(f"EROARE la {low}, {high}: {e}")
            numeric = None
        certified = numeric is expected
        failures += not certified
        entries.append({"source": source, "angles": [low, high], "expected": expected,
                        "numeric": numeric, "certified": certified})

    OUTPUT.write_text(json.dumps({"fixtures": entries}, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"Rezultat scris în {OUTPUT}: {len(entries) - failures} certificate, {failures} eșuate.")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
