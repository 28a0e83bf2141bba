import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import IO, Iterator, List, Optional, Tuple

from pydantic import BaseModel
from tqdm import tqdm

from catalog.catalog_file import dump_jsonl, read_catalog
from catalog.generator import EnumerationSpec, all_graphs, all_trees
from catalog.graph6 import emit_graph6, parse_graph6
from cores.graph_core import Graph
from families.constructors import b_family, build_family, parse_family_spec, spot_graphs
from harness.checks import run_check
from harness.models import ReportHeader, SuiteSummary, TheoremCheck
from harness.profile import GraphProfile
from utils.config import ToolkitConfig, configure, get_config, get_limits, get_tolerances
from utils.errors import ToolkitError
from utils.logger import get_harness_logger, setup_logging


class SuiteSource(BaseModel):
    """Источник графов: перебор до max_n, файл каталога и/или семейства"""

    max_n: Optional[int] = None
    catalog: Optional[str] = None
    families: List[str] = []
    constructed: bool = True

    def label(self) -> str:
        parts = []
        if self.max_n is not None:
            parts.append(f"enumerate:n<={self.max_n}")
        if self.catalog:
            parts.append(f"catalog:{self.catalog}")
        parts.extend(self.families)
        return " ".join(parts)


def _constructed_feed(max_n: int) -> Iterator[Graph]:
    """B_2..B_12, графы с численными оценками и деревья, не покрытые перебором"""
    for n in range(2, 13):
        if n + 2 > max_n:
            yield b_family(n)
    for g in spot_graphs().values():
        if g.n > max_n:
            yield g
    for n in range(max_n + 1, get_limits().max_tree_n + 1):
        yield from all_trees(n)


def iter_source_graphs(source: SuiteSource) -> Iterator[Graph]:
    if source.max_n is not None:
        for n in range(1, source.max_n + 1):
            yield from all_graphs(EnumerationSpec(n=n))
        if source.constructed:
            yield from _constructed_feed(source.max_n)
    if source.catalog:
        yield from read_catalog(source.catalog)
    for text in source.families:
        yield build_family(parse_family_spec(text))


def _init_worker(config: ToolkitConfig):
    configure(config)
    setup_logging(config.log_level, config.log_dir)


def check_graph(task: Tuple[str, List[str]]) -> Tuple[List[TheoremCheck], bool]:
    """Все проверки одного графа; второй элемент - нарушение E(G) + E(Ḡ) >= 2n"""
    graph6, theorem_ids = task
    profile = GraphProfile(parse_graph6(graph6))
    checks = [run_check(tid, profile) for tid in theorem_ids]
    below = False
    if "T12" in theorem_ids and profile.n >= 1:
        try:
            total = profile.spectrum.energy + profile.complement_spectrum.energy
            below = total < 2 * profile.n - get_tolerances().inequality_slack
        except ToolkitError:
            below = False
    return checks, below


def run_suite(theorem_ids: List[str], source: SuiteSource, stream: Optional[IO[str]] = None,
              jobs: int = 1, progress: bool = False, failures_only: bool = False) -> SuiteSummary:
    """Прогон проверок; порядок записей совпадает с порядком графов при любом jobs"""
    logger = get_harness_logger()
    start_time = time.perf_counter()
    graph6s = [emit_graph6(g) for g in iter_source_graphs(source)]
    logger.log_system_event("suite_started", "harness",
                            f"{len(graph6s)} graphs, theorems {','.join(theorem_ids)}",
                            {"source": source.label(), "jobs": jobs})

    if stream is not None:
        header = ReportHeader(tolerances=get_tolerances(), theorems=theorem_ids,
                              source=source.label())
        dump_jsonl([header], stream)

    summary = SuiteSummary(graphs=len(graph6s))
    tasks = [(graph6, theorem_ids) for graph6 in graph6s]
    bar = tqdm(total=len(tasks), file=sys.stderr, disable=not progress, desc="verify", unit="graph")

    def consume(results):
        for graph6, (checks, below) in zip(graph6s, results):
            for check in checks:
                summary.record(check)
                if stream is not None and (not failures_only or check.status in ("failed", "error")):
                    dump_jsonl([check], stream)
            if below:
                summary.t12_empirical_exceptions.append(graph6)
            bar.update(1)

    try:
        if jobs <= 1:
            consume(map(check_graph, tasks))
        else:
            with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker,
                                     initargs=(get_config(),)) as pool:
                consume(pool.map(check_graph, tasks, chunksize=32))
    finally:
        bar.close()

    logger.log_performance_metric("suite_time", time.perf_counter() - start_time,
                                  {"graphs": str(len(graph6s)), "jobs": str(jobs)})
    logger.log_suite_summary(summary.model_dump(include={"passed", "failed", "errored",
                                                         "checked", "hypothesis_skipped"}))
    return summary
