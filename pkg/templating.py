from pathlib import Path

from jinja2 import Environment, FileSystemLoader, StrictUndefined, select_autoescape

TEMPLATE_DIR = Path(__file__).parent / "templates"


# --- Filtre pentru coordonate ---
def fixed(value, digits=3):
    """Formatează un număr cu un număr fix de zecimale (ieșire deterministă în SVG)."""
    return f"{float(value):.{digits}f}"


def points_attr(points, digits=3):
    """Lista de perechi (x, y) ca atribut 'points' pentru <polyline>."""
    return " ".join(f"{fixed(x, digits)},{fixed(y, digits)}" for x, y in points)


# Inițializează motorul de template-uri
templates = Environment(
    loader=FileSystemLoader(str(TEMPLATE_DIR)),
    autoescape=select_autoescape(["svg", "j2"]),
    undefined=StrictUndefined,
    keep_trailing_newline=True,
)

templates.filters['fixed'] = fixed
templates.filters['points'] = points_attr


def render(template_name: str, **context) -> str:
    return templates.get_template(template_name).render(**context)
