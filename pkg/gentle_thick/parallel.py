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

# Fan-out helper for independent oracle and search calls.

from functools import wraps
import logging
from multiprocessing import cpu_count
import threading

from six.moves import queue

logger = logging.getLogger(__name__)

_DONE = object()


class Task(object):
    __slots__ = ('order', 'func', 'args', 'kwargs')

    def __init__(self, order, func, args=None, kwargs=None):
        self.order = order
        self.func = func
        self.args = args or []
        self.kwargs = kwargs or {}


class Worker(threading.Thread):
    """Pull tasks from ``in_queue`` and push ``(order, result)`` pairs.

    Exceptions raised by a task are returned as its result so that the
    caller decides whether to re-raise them.
    """
    def __init__(self, in_queue, out_queue):
        threading.Thread.__init__(self)
        self.daemon = True
        self.in_queue = in_queue
        self.out_queue = out_queue

    def run(self):
        while True:
            task = self.in_queue.get()
            if task is _DONE:
                return
            try:
                res = task.func(*task.args, **task.kwargs)
            except Exception as exc:
                logger.debug("task %d raised %r", task.order, exc)
                res = exc
            self.out_queue.put((task.order, res))


def concurrent(func):
    @wraps(func)
    def concurrentized(*args, **kwargs):
        """Run the decorated function once per entry of ``concurrent``.

        :arg list concurrent: keyword argument dicts, one per run; results
            come back in the same order.
        :arg int n_workers: worker threads; 0 autodetects the core count,
            1 runs everything inline.
        :arg bool reraise: re-raise the first exception returned by a run
            (default True).
        """
        n_workers = kwargs.pop('n_workers', 0)
        p_kwargs = kwargs.pop('concurrent', [])
        reraise = kwargs.pop('reraise', True)
        if not p_kwargs:
            return func(*args, **kwargs)
        if not n_workers:
            n_workers = cpu_count()
        if n_workers == 1 or len(p_kwargs) == 1:
            results = []
            for f_kwargs in p_kwargs:
                call_kwargs = dict(kwargs)
                call_kwargs.update(f_kwargs)
                results.append(func(*args, **call_kwargs))
            return results

        n_workers = min(n_workers, len(p_kwargs))
        logger.debug("Running concurrent %d workers", n_workers)
        in_queue = queue.Queue()
        out_queue = queue.Queue()
        pool = [Worker(in_queue, out_queue) for _ in range(n_workers)]
        for worker in pool:
            worker.start()

        for n_ord, f_kwargs in enumerate(p_kwargs):
            call_kwargs = dict(kwargs)
            call_kwargs.update(f_kwargs)
            in_queue.put(Task(n_ord, func, args, call_kwargs))
        for _ in pool:
            in_queue.put(_DONE)

        results = [out_queue.get() for _ in p_kwargs]
        for worker in pool:
            worker.join()
        results = [r[1] for r in sorted(results, key=lambda r: r[0])]
        if reraise:
            for res in results:
                if isinstance(res, Exception):
                    raise res
        return results
    return concurrentized
