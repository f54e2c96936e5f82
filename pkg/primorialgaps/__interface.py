from .__logger import GapLogger
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional


class WorkerPoolInterface:
    def __init__(self, workers: int, logger: GapLogger) -> None:
        """
        Initialize the worker pool interface. With a single worker every
        call runs inline and no process is started.

        :param workers: Number of worker processes
        :param logger: GapLogger object
        """
        if workers < 1:
            raise ValueError(f'Worker count must be at least 1, got {workers}')
        self.__logger = logger
        self.__workers = workers
        self.__executor: Optional[ProcessPoolExecutor] = None



    @property
    def workers(self) -> int:
        """
        Number of workers
        """
        return self.__workers



    @property
    def enabled(self) -> bool:
        """
        Work is spread over several processes
        """
        return self.__workers > 1



    def map(self, function: Callable, items: Iterable) -> list:
        """
        Apply a function to every item. Results keep the order of the items
        regardless of completion order.

        :param function: Picklable module-level function
        :param items: Arguments, one per call
        :return: Results in input order
        """
        items = list(items)
        if not items:
            return []
        self.__logger.debug(f'[POOL][MAP] {len(items)} tasks on {self.__workers} workers')
        if not self.enabled or len(items) == 1:
            return [function(item) for item in items]
        if self.__executor is None:
            self.__executor = ProcessPoolExecutor(max_workers=self.__workers)
        return list(self.__executor.map(function, items))



    def cleanup(self):
        """
        Shut the worker processes down
        """
        if self.__executor is not None:
            self.__logger.debug('[POOL][SHUTDOWN] Stopping workers')
            self.__executor.shutdown(cancel_futures=True)
            self.__executor = None
