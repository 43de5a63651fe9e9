from testtools import ExpectedException

from gentle_thick import errors
from tests import base


class TestAlgebraFormatError(base.BaseTestCase):

    def test_position(self):
        # source, line and column lead the message when known
        message = "exm1.alg, line 3, column 7: unknown arrow 'x'"
        with ExpectedException(errors.AlgebraFormatError, message):
            raise errors.AlgebraFormatError("unknown arrow 'x'", line=3,
                                            column=7, source='exm1.alg')

    def test_without_position(self):
        e = errors.AlgebraFormatError("no vertices")
        self.assertEqual("no vertices", str(e))
        self.assertIsNone(e.line)
        self.assertIsNone(e.column)


class TestViolationError(base.BaseTestCase):

    def test_lists_violations(self):
        e = errors.NotGentleError(['first', 'second'])
        self.assertEqual("not gentle:\n  - first\n  - second", str(e))
        self.assertEqual(['first', 'second'], e.violations)

    def test_header_override(self):
        e = errors.InvalidStringError(['a then b is a relation'],
                                      header="not a band")
        self.assertEqual("not a band:\n  - a then b is a relation", str(e))

    def test_no_violations(self):
        self.assertEqual("not a homotopy string",
                         str(errors.InvalidStringError([])))


class TestBounds(base.BaseTestCase):

    def test_bound_exhausted(self):
        e = errors.BoundExhausted("searching factorizations", 6)
        self.assertEqual(6, e.bound)
        self.assertEqual("bound exhausted while searching factorizations "
                         "(bound 6)", str(e))

    def test_undecided(self):
        e = errors.Undecided(14, 12)
        self.assertEqual(14, e.dimension)
        self.assertIn("exceeds the idempotent search bound 12", str(e))

    def test_ungraded(self):
        with ExpectedException(errors.UngradedError, "ungraded cyclic word"):
            raise errors.UngradedError(2)

    def test_hierarchy(self):
        for cls in (errors.AlgebraFormatError, errors.NotGentleError,
                    errors.PreconditionError, errors.ChainMapError,
                    errors.ModelInconsistency,
                    errors.GentleThickConfigException):
            self.assertTrue(issubclass(cls, errors.GentleThickException))
