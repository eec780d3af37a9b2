import threading
import time

import pytest

from semichain.utils import run_concurrently


def _sleeper(value, delay):
    def task():
        time.sleep(delay)
        return value

    return task


def _failing(error, delay=0.0, finished=None):
    def task():
        time.sleep(delay)
        if finished is not None:
            finished.append(error)
        raise error

    return task


def test_results_follow_task_order():
    tasks = [_sleeper(i, 0.05 * (4 - i)) for i in range(4)]
    assert run_concurrently(tasks, threads=4) == [0, 1, 2, 3]
    assert run_concurrently(tasks, threads=1) == [0, 1, 2, 3]
    assert run_concurrently([]) == []


def test_thread_limit_is_respected():
    lock = threading.Lock()
    running = [0]
    peak = [0]

    def task():
        with lock:
            running[0] += 1
            peak[0] = max(peak[0], running[0])
        time.sleep(0.05)
        with lock:
            running[0] -= 1
        return True

    assert all(run_concurrently([task] * 6, threads=2))
    assert peak[0] <= 2


def test_first_failure_in_task_order_is_raised():
    finished = []
    slow_error = ValueError("first task")
    fast_error = RuntimeError("second task")
    tasks = [
        _failing(slow_error, delay=0.2, finished=finished),
        _failing(fast_error, finished=finished),
        _sleeper("done", 0.1),
    ]
    with pytest.raises(ValueError, match="first task"):
        run_concurrently(tasks, threads=3)
    assert finished == [fast_error, slow_error]


def test_failure_waits_for_the_other_tasks():
    completed = []

    def slow():
        time.sleep(0.2)
        completed.append("slow")
        return 1

    with pytest.raises(KeyError):
        run_concurrently([_failing(KeyError("x")), slow], threads=2)
    assert completed == ["slow"]


def test_sequential_failure_propagates():
    with pytest.raises(ValueError):
        run_concurrently([_sleeper(1, 0), _failing(ValueError("boom"))], threads=1)
