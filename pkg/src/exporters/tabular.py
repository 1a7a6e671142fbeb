"""CSV exporter for family limit tables and module points."""

import csv
import io
import logging
from pathlib import Path
from typing import List

from src.artubes import Family
from src.rhombic import PicturePoint, family_ipf, family_wf, family_wf_star, rhombic_limit

logger = logging.getLogger(__name__)


class TableExporter:
    """Export families and rhombic points as CSV."""

    FAMILY_HEADERS = [
        "Family",
        "Component",
        "Init",
        "Period",
        "Fin",
        "WF",
        "WFStar",
        "Limit",
        "Colimit",
        "Approach",
    ]

    POINT_HEADERS = [
        "Module",
        "Component",
        "Mu",
        "MuStar",
        "X",
        "Y",
    ]

    def __init__(self, output_dir: Path):
        self.output_dir = output_dir
        self.output_dir.mkdir(parents=True, exist_ok=True)

    @classmethod
    def render_families(cls, families: List[Family]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(cls.FAMILY_HEADERS)
        for family in families:
            writer.writerow(cls._format_family_row(family))
        return buffer.getvalue()

    @classmethod
    def render_points(cls, points: List[PicturePoint]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(cls.POINT_HEADERS)
        for point in points:
            writer.writerow(cls._format_point_row(point))
        return buffer.getvalue()

    def export_families(self, families: List[Family], filename: str = "families.csv") -> Path:
        """
        Export the limit table of some families to CSV.

        Args:
            families: Families to list, one row each
            filename: Output filename

        Returns:
            Path to the created CSV file
        """
        output_path = self.output_dir / filename
        output_path.write_text(self.render_families(families), encoding="utf-8")
        logger.info(f"Exported {len(families)} families to {output_path}")
        return output_path

    def export_points(self, points: List[PicturePoint], filename: str = "points.csv") -> Path:
        output_path = self.output_dir / filename
        output_path.write_text(self.render_points(points), encoding="utf-8")
        logger.info(f"Exported {len(points)} points to {output_path}")
        return output_path

    @staticmethod
    def _format_family_row(family: Family) -> List[str]:
        ipf = family_ipf(family)
        limit = rhombic_limit(family)
        return [
            family.name,
            family.component.value,
            ipf.init.render(),
            ipf.per.render(),
            ipf.fin.render(),
            family_wf(family).render(),
            family_wf_star(family).render(),
            limit.mu_limit.render(),
            limit.mustar_limit.render(),
            limit.approach.value,
        ]

    @staticmethod
    def _format_point_row(point: PicturePoint) -> List[str]:
        return [
            point.name,
            point.component.value,
            point.point.mu.render(),
            point.point.mustar.render(),
            str(point.point.x),
            str(point.point.y),
        ]
