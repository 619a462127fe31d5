"""Plan-length and crossing bounds asserted by the regression suite.

The gather and unlabeled bounds carry constant 1 straight from the step
counts of their procedures.  The motion, labeled, and crossing factors are
not theory constants: they were pinned once against the benchmark corpus
(see tests/test_acceptance.py) and act as regression guards thereafter.
"""

GATHER_LENGTH_FACTOR = 1.0
UNLABELED_LENGTH_FACTOR = 1.0

# pinned at calibration over random corpora up to n = 200 plus a dense
# small-n sweep; observed maxima: 1.17 (motion), 0.35 (labeled), 1.45
# (crossings)
MOTION_LENGTH_FACTOR = 3.0
PMT_LENGTH_FACTOR = 2.0
CROSSING_FACTOR = 3.0


def gather_length_bound(n, q):
    return GATHER_LENGTH_FACTOR * n * q


def unlabeled_length_bound(n):
    return UNLABELED_LENGTH_FACTOR * n * n


def motion_length_bound(n, c):
    return MOTION_LENGTH_FACTOR * n * max(1, c)


def pmt_length_bound(n, p, c):
    return PMT_LENGTH_FACTOR * (p * n * max(1, c) + n * n)


def crossing_bound(p, c):
    return CROSSING_FACTOR * max(1, p) * max(1, c)
