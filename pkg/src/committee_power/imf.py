"""Embedded IMF Executive Board vote shares.

The 24 Executive Directors are modeled as bloc voters holding their seat's
aggregate vote share before and after the 2016 quota reform.  Constituency
seats are named after their largest member; shares are stored as integer
basis points (16.72% -> 1672) so all tallies stay exact.  Shares need not
sum to exactly 10000.
"""

import csv
import io
from dataclasses import dataclass

from .core import Committee
from .errors import ValidationError

ERAS = ("pre", "post")


@dataclass(frozen=True)
class BoardSeat:
    label: str
    constituency: bool
    pre_bp: int
    post_bp: int


SEATS = (
    BoardSeat("USA", False, 1672, 1647),
    BoardSeat("Japan", False, 622, 613),
    BoardSeat("China", False, 380, 607),
    BoardSeat("Netherlands", True, 656, 541),
    BoardSeat("Germany", False, 580, 531),
    BoardSeat("Spain", True, 490, 529),
    BoardSeat("Indonesia", True, 393, 433),
    BoardSeat("Italy", True, 422, 412),
    BoardSeat("France", False, 428, 402),
    BoardSeat("United Kingdom", False, 428, 402),
    BoardSeat("Korea", True, 348, 378),
    BoardSeat("Canada", True, 359, 337),
    BoardSeat("Sweden", True, 339, 328),
    BoardSeat("Turkey", True, 291, 322),
    BoardSeat("South Africa", True, 341, 309),
    BoardSeat("Brazil", True, 261, 306),
    BoardSeat("India", True, 280, 304),
    BoardSeat("Switzerland", True, 294, 288),
    BoardSeat("Russian Federation", True, 255, 283),
    BoardSeat("Iran", True, 273, 254),
    BoardSeat("Utd. Arab Emirates", True, 257, 252),
    BoardSeat("Saudi Arabia", False, 280, 201),
    BoardSeat("Dem. Rep. Congo", True, 146, 162),
    BoardSeat("Argentina", True, 184, 159),
)

LABELS = tuple(seat.label for seat in SEATS)


def shares_bp(era: str) -> tuple[int, ...]:
    if era not in ERAS:
        raise ValidationError(f"era must be one of {ERAS}, got {era!r}")
    if era == "pre":
        return tuple(seat.pre_bp for seat in SEATS)
    return tuple(seat.post_bp for seat in SEATS)


def board_committee(rule: str, era: str, m: int = 3) -> Committee:
    """The executive board as a weighted committee over m candidates."""
    return Committee(m, shares_bp(era), rule)


def dataset_csv() -> str:
    """The embedded dataset as CSV (basis points, lossless round-trip)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "constituency", "pre_bp", "post_bp"])
    for seat in SEATS:
        writer.writerow([seat.label, int(seat.constituency),
                         seat.pre_bp, seat.post_bp])
    return buf.getvalue()


def parse_dataset_csv(text: str) -> tuple[BoardSeat, ...]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != ["label", "constituency", "pre_bp", "post_bp"]:
        raise ValidationError(f"unexpected dataset header {header}")
    return tuple(
        BoardSeat(row[0], bool(int(row[1])), int(row[2]), int(row[3]))
        for row in reader
    )
