import logging
import time
from functools import wraps

logger = logging.getLogger(__name__)


def timed_report(verifier):
    """
    Decorator that stamps the wall-clock duration of a verifier onto the
    VerificationReport it returns
    """
    @wraps(verifier)
    def _wrapped(*args, **kwargs):
        started = time.perf_counter()
        report = verifier(*args, **kwargs)
        report.elapsed = time.perf_counter() - started
        verdict = 'passed' if report.passed else 'FAILED'
        logger.info(f"{verifier.__name__} [{report.scope}] {verdict} in {report.elapsed:.2f}s")
        return report
    return _wrapped
