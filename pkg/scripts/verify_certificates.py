#!/usr/bin/env python3
"""
Seshadri Certificate Verification

Re-checks JSON certificate documents written by ``seshadri ... --format json``
without running the certifier: every Nef witness is re-summed and each
generator re-tested against its family statement, and every NotNef pairing
is re-evaluated.

Usage:
    python scripts/verify_certificates.py certs/*.json
    python scripts/verify_certificates.py certs/g7.json --genus 7
"""

import argparse
import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from dotenv import load_dotenv

env_path = Path(__file__).parent.parent / ".env"
if env_path.exists():
    load_dotenv(env_path)

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s] %(message)s")
logger = logging.getLogger(__name__)

from seshadri.errors import SeshadriError
from seshadri.models import load_certificate_document
from seshadri.products import verify_certificate


def verify_document(path: Path, genus: int | None = None) -> tuple[int, int]:
    """Return ``(checked, failed)`` for one document."""
    document = load_certificate_document(path)
    failed = 0
    for certificate in document.certificates:
        if verify_certificate(certificate, genus):
            logger.info("  ok      %s  %s (g=%d)", certificate.verdict.value, certificate.target, certificate.genus)
        else:
            failed += 1
            logger.error("  FAILED  %s  %s (g=%d)", certificate.verdict.value, certificate.target, certificate.genus)
    return len(document.certificates), failed


def main() -> int:
    parser = argparse.ArgumentParser(description="Verify Seshadri certificate documents")
    parser.add_argument("documents", nargs="+", type=Path, help="JSON certificate documents")
    parser.add_argument("--genus", type=int, help="Check against this genus instead of the recorded one")
    args = parser.parse_args()

    total = 0
    failures = 0
    for path in args.documents:
        logger.info("Verifying %s", path)
        try:
            checked, failed = verify_document(path, args.genus)
        except SeshadriError as e:
            logger.error("  cannot read %s: %s", path, e)
            failures += 1
            continue
        total += checked
        failures += failed

    if failures:
        logger.error("%d of %d certificates failed verification", failures, total)
        return 1
    logger.info("All %d certificates verified", total)
    return 0


if __name__ == "__main__":
    sys.exit(main())
