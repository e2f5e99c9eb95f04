"""
Rendering of command results as JSON, CSV or SVG text, and writing of
artifact files.
"""
import csv
import io
import json
import logging
from pathlib import Path

from django.conf import settings
from django.core.serializers.json import DjangoJSONEncoder

logger = logging.getLogger(__name__)


def render_json(payload):
    return json.dumps(payload, cls=DjangoJSONEncoder, indent=2) + '\n'


def render_csv(header, rows):
    """rows are dicts keyed by header or plain sequences"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([row[name] for name in header] if isinstance(row, dict) else row)
    return buffer.getvalue()


def artifact_path(out):
    """Relative paths land under APAVER_OUTPUT_DIR"""
    path = Path(out)
    if not path.is_absolute():
        path = Path(settings.APAVER_OUTPUT_DIR) / path
    return path


def write_artifact(text, out):
    path = artifact_path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding='utf-8')
    logger.info(f"Wrote {len(text)} characters to {path}")
    return path
