#!/usr/bin/env python
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

import io
import json
import os

import fixtures
import yaml

from gentle_thick.cli import entry
from gentle_thick.config import FIELD_ORDER_ENV
from gentle_thick import errors
from tests import base
from tests.base import mock


class CmdTestsBase(base.BaseTestCase):

    fixtures_path = os.path.join(os.path.dirname(__file__), 'fixtures')

    def setUp(self):
        super(CmdTestsBase, self).setUp()

        # the field order may come from the environment of the test run
        self.useFixture(fixtures.EnvironmentVariable(FIELD_ORDER_ENV))

        self.default_config_file = os.path.join(self.fixtures_path,
                                                'default.ini')

    @staticmethod
    def algebra_path(name):
        return os.path.join(base.ALGEBRAS_PATH, name + '.alg')

    def fixture_path(self, name):
        return os.path.join(self.fixtures_path, name)

    def execute_gentle_thick_with_args(self, args):
        """Run the tool and return its status and standard output."""
        with mock.patch('sys.stdout', new_callable=io.BytesIO) as stdout:
            gentle_thick = entry.GentleThick(args)
            status = gentle_thick.execute()
        return status, stdout.getvalue().decode('utf-8')


class TestCmd(CmdTestsBase):

    def test_with_empty_args(self):
        """
        User passes no args, should fail with SystemExit
        """
        with mock.patch('sys.stderr'):
            self.assertRaises(SystemExit, entry.GentleThick, [])

    def test_validate_smooth(self):
        args = ['--conf', self.default_config_file, 'validate',
                self.algebra_path('a2')]
        status, output = self.execute_gentle_thick_with_args(args)
        self.assertEqual(0, status)
        self.assertEqual("gentle, homologically smooth\n", output)

    def test_validate_not_smooth(self):
        args = ['--conf', self.default_config_file, 'validate',
                self.algebra_path('related-cycle')]
        status, output = self.execute_gentle_thick_with_args(args)
        self.assertEqual(1, status)
        self.assertEqual(
            "gentle, not homologically smooth (cycle x y z)\n", output)

    def test_validate_not_gentle(self):
        args = ['--conf', self.default_config_file, 'validate',
                self.algebra_path('exm2-printed')]
        status, output = self.execute_gentle_thick_with_args(args)
        self.assertEqual(1, status)
        self.assertTrue(output.startswith("not gentle:\n"))

    def test_validate_canonical(self):
        args = ['--conf', self.default_config_file, 'validate',
                '--canonical', self.algebra_path('a2')]
        status, output = self.execute_gentle_thick_with_args(args)
        self.assertEqual(0, status)
        self.assertIn("arrow a: 1 -> 2\n", output)

    def test_validate_json(self):
        args = ['--conf', self.default_config_file, '--format', 'json',
                'validate', self.algebra_path('a2')]
        status, output = self.execute_gentle_thick_with_args(args)
        document = json.loads(output)
        self.assertEqual('gentle-thick/1', document['schema'])
        self.assertEqual('validate', document['verb'])
        self.assertTrue(document['result']['smooth'])
        self.assertEqual(['1', '2'],
                         document['result']['algebra']['vertices'])

    def test_hom(self):
        args = ['--conf', self.default_config_file, 'hom',
                self.algebra_path('a2'), '--from', 'e@2', '--to', 'e@1']
        status, output = self.execute_gentle_thick_with_args(args)
        self.assertEqual(0, status)
        self.assertEqual("0: 1\ntotal: 1\n", output)

    def test_hom_json(self):
        args = ['--conf', self.default_config_file, '--format', 'json',
                'hom', self.algebra_path('a2'), '--from', 'e@2',
                '--to', 'e@1']
        status, output = self.execute_gentle_thick_with_args(args)
        self.assertEqual({'schema': 'gentle-thick/1', 'verb': 'hom',
                          'result': {'dims': {'0': 1}, 'total': 1}},
                         json.loads(output))

    def test_hom_unknown_arrow(self):
        args = ['--conf', self.default_config_file, 'hom',
                self.algebra_path('a2'), '--from', 'x', '--to', 'e@1']
        gentle_thick = entry.GentleThick(args)
        self.assertRaises(errors.AlgebraFormatError, gentle_thick.execute)

    def test_classify_stabilize(self):
        args = ['--conf', self.default_config_file, '--format', 'json',
                'classify', self.algebra_path('exm2'), 'c.a b', 'e@1',
                '--stabilize', 'e@3', '--powers', '4']
        status, output = self.execute_gentle_thick_with_args(args)
        self.assertEqual(0, status)
        spherelike, exceptional = json.loads(output)['result']
        self.assertEqual('spherelike', spherelike['kind'])
        self.assertEqual(['e@3'], [entry['test'] for entry in
                                   spherelike['stabilization']])
        self.assertEqual(4, len(spherelike['stabilization'][0]['values']))
        self.assertNotIn('stabilization', exceptional)

    def test_glue(self):
        args = ['--conf', self.default_config_file, 'glue',
                self.algebra_path('a2'), 'e@1', 'left', 'e@2', 'left']
        status, output = self.execute_gentle_thick_with_args(args)
        self.assertEqual(0, status)
        self.assertEqual("0 interior crossings, 1 shared marked points\n"
                         "a (shift 1)\n", output)

    def test_glue_checked_against_oracle(self):
        args = ['--conf', self.default_config_file, 'glue',
                self.algebra_path('a2'), 'e@1', 'left', 'e@2', 'left']
        with mock.patch('gentle_thick.oracle.hom_total', return_value=5):
            gentle_thick = entry.GentleThick(args)
            self.assertRaises(errors.ModelInconsistency,
                              gentle_thick.execute)

    def test_member(self):
        args = ['--conf', self.default_config_file, 'member',
                self.algebra_path('a2'), '--target', 'a',
                '--collection', self.fixture_path('a2-vertices.coll')]
        status, output = self.execute_gentle_thick_with_args(args)
        self.assertEqual(0, status)
        self.assertEqual('generated', output.splitlines()[0])

    def test_member_not_generated(self):
        args = ['--conf', self.default_config_file, 'member',
                self.algebra_path('a2'), '--target', 'e@2',
                '--collection', self.fixture_path('a2-first.coll')]
        status, output = self.execute_gentle_thick_with_args(args)
        self.assertEqual(1, status)
        self.assertEqual('not-generated', output.splitlines()[0])

    def test_member_certificate(self):
        tmpdir = self.useFixture(fixtures.TempDir()).path
        cert = os.path.join(tmpdir, 'a.cert')
        collection = self.fixture_path('a2-vertices.coll')
        args = ['--conf', self.default_config_file, 'member',
                self.algebra_path('a2'), '--target', 'a',
                '--collection', collection, '-o', cert]
        self.execute_gentle_thick_with_args(args)
        with io.open(cert, 'r', encoding='utf-8') as fp:
            documents = list(yaml.safe_load_all(fp))
        self.assertEqual(1, len(documents))
        self.assertEqual('generated', documents[0]['status'])
        self.assertEqual('a', documents[0]['from'])
        self.assertEqual(collection, documents[0]['to'])

    def test_poset(self):
        args = ['--conf', self.default_config_file, 'poset',
                self.algebra_path('a2'), '--letters', '2']
        status, output = self.execute_gentle_thick_with_args(args)
        self.assertEqual(0, status)
        self.assertEqual("classes: 4\n"
                         "  a\n"
                         "  a | e@1\n"
                         "  e@1\n"
                         "  e@2\n"
                         "covers:\n"
                         "  a < a | e@1\n"
                         "  e@1 < a | e@1\n"
                         "  e@2 < a | e@1\n", output)

    def test_poset_cross_check(self):
        args = ['--conf', self.default_config_file, 'poset',
                self.algebra_path('a2'), '--letters', '2', '--cross-check']
        status, output = self.execute_gentle_thick_with_args(args)
        self.assertEqual(0, status)
        self.assertTrue(output.endswith("cross-check: agrees\n"))


class TestExitCodes(CmdTestsBase):

    def test_exit_codes(self):
        self.assertEqual(entry.EXIT_BOUND, entry.exit_code(
            errors.BoundExhausted("searching", 4)))
        self.assertEqual(entry.EXIT_BOUND, entry.exit_code(
            errors.Undecided(5, 4)))
        self.assertEqual(entry.EXIT_USAGE, entry.exit_code(
            errors.AlgebraFormatError("bad line")))
        self.assertEqual(entry.EXIT_USAGE, entry.exit_code(
            errors.PreconditionError("no arcs")))
        self.assertEqual(entry.EXIT_NEGATIVE, entry.exit_code(
            errors.NotGentleError([])))

    def test_unexpected_exception_reraised(self):
        self.assertRaises(ValueError, entry.exit_code, ValueError("boom"))

    def test_main_reports_usage_error(self):
        argv = ['gentle-thick', '--conf', self.default_config_file, 'hom',
                self.algebra_path('a2'), '--from', 'x', '--to', 'e@1']
        with mock.patch('sys.argv', argv):
            exc = self.assertRaises(SystemExit, entry.main)
        self.assertEqual(entry.EXIT_USAGE, exc.code)
        self.assertIn("unknown arrow 'x'", self.logger.output)

    def test_main_exit_status(self):
        argv = ['gentle-thick', '--conf', self.default_config_file,
                'validate', self.algebra_path('related-cycle')]
        with mock.patch('sys.argv', argv):
            with mock.patch('sys.stdout', new_callable=io.BytesIO):
                exc = self.assertRaises(SystemExit, entry.main)
        self.assertEqual(entry.EXIT_NEGATIVE, exc.code)

    def test_main_missing_algebra_file(self):
        missing = os.path.join(self.fixtures_path, 'missing.alg')
        argv = ['gentle-thick', '--conf', self.default_config_file,
                'validate', missing]
        with mock.patch('sys.argv', argv):
            exc = self.assertRaises(SystemExit, entry.main)
        self.assertEqual(entry.EXIT_USAGE, exc.code)
        self.assertIn('missing.alg', self.logger.output)

    def test_environment_errors_are_usage_errors(self):
        self.assertEqual(entry.EXIT_USAGE, entry.exit_code(
            IOError(2, "No such file or directory", "x.alg")))
