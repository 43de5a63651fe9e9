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

# pytest does not apply testscenarios' ``scenarios`` attribute the way the
# testr/subunit runner does, so expand each scenario into its own class here.

import inspect

from _pytest.unittest import UnitTestCase
import testscenarios


def pytest_pycollect_makeitem(collector, name, obj):
    if not (inspect.isclass(obj) and
            issubclass(obj, testscenarios.TestWithScenarios) and
            getattr(obj, 'scenarios', None)):
        return None
    items = []
    for scenario_name, attrs in obj.scenarios:
        cls_name = '{0}[{1}]'.format(name, scenario_name)
        body = dict(attrs)
        body['scenarios'] = None
        scenario_cls = type(cls_name, (obj,), body)
        # the collector looks the class up by name on the module
        setattr(collector.obj, cls_name, scenario_cls)
        items.append(UnitTestCase.from_parent(collector, name=cls_name))
    return items
