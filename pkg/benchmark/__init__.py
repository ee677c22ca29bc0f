"""
Benchmark package: run configuration, harness, reports and trace files.
"""

from benchmark.run_config import RunConfig, ALGORITHM_CHOICES
from benchmark.report import ReportRow, format_table, write_report_csv, golden_document, write_golden
from benchmark.trace_io import TRACE_HEADER, emit_trace, load_trace, trace_rows
from benchmark.runner import run_benchmark, build_instance, exit_status
