"""
Verification reports: named checks with expected and actual values, the first
failing witness, and grid points skipped as infeasible.
"""
import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    expected: object = None
    actual: object = None
    witness: dict = None

    def to_dict(self):
        record = {
            'name': self.name,
            'passed': self.passed,
            'expected': self.expected,
            'actual': self.actual,
        }
        if self.witness is not None:
            record['witness'] = self.witness
        return record


@dataclass
class VerificationReport:
    scope: str
    checks: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    @property
    def witness(self):
        """Witness of the first failing check in deterministic order"""
        for check in self.failures:
            if check.witness is not None:
                return check.witness
        return None

    def add(self, name, passed, expected=None, actual=None, witness=None):
        check = Check(name, bool(passed), expected, actual, witness if not passed else None)
        self.checks.append(check)
        return check

    def skip(self, name, reason):
        self.skipped.append({'name': name, 'reason': reason})

    def merge(self, other, scope=None):
        return VerificationReport(
            scope or f'{self.scope}; {other.scope}',
            self.checks + other.checks,
            self.skipped + other.skipped,
            self.elapsed + other.elapsed,
        )

    def to_dict(self, timings=False):
        record = {
            'scope': self.scope,
            'passed': self.passed,
            'total': len(self.checks),
            'failed': len(self.failures),
            'checks': [check.to_dict() for check in self.checks],
            'skipped': self.skipped,
        }
        if timings:
            record['elapsed'] = round(self.elapsed, 3)
        return record

    def to_json(self, timings=False):
        return json.dumps(self.to_dict(timings), indent=2, sort_keys=False)
