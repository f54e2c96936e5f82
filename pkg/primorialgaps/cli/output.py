"""
Rendering and parsing of result rows as text table, CSV and JSON
"""
from ..analyzer import ConjectureFlags, DifferenceReport
from ..constants import CSV, JSON, TABLE
from ..oracle import GapSpectrum
from ..utils import stringutil
from typing import Sequence
import csv
import io
import json

TABLE_HEADER = 'k | p_k | h(k-1) | N_min(k) | non-existent differences | h(k)'
CSV_COLUMNS = ['k', 'p_k', 'h_prev', 'n_min', 'missing', 'h']


def render_row(report: DifferenceReport) -> str:
    """
    One table line, e.g. `6 | 13 | 14 | 18 | 20 | 22`
    """
    cells = [
        str(report.k),
        str(report.p_k),
        '-' if report.h_prev is None else str(report.h_prev),
        str(report.n_min),
        stringutil.join_values(report.missing),
        str(report.h),
    ]
    return ' | '.join(cells)



def parse_row(line: str) -> DifferenceReport:
    """
    Inverse of `render_row`
    """
    k, p_k, h_prev, n_min, missing, h = (cell.strip() for cell in line.split('|'))
    return DifferenceReport(
        k=int(k),
        p_k=int(p_k),
        h_prev=None if h_prev == '-' else int(h_prev),
        n_min=int(n_min),
        missing=tuple(stringutil.split_values(missing)),
        h=int(h),
    )



def render_table(reports: Sequence[DifferenceReport]) -> str:
    lines = [TABLE_HEADER] + [render_row(report) for report in reports]
    return '\n'.join(lines) + '\n'



def render_csv(reports: Sequence[DifferenceReport]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        writer.writerow([
            report.k,
            report.p_k,
            '' if report.h_prev is None else report.h_prev,
            report.n_min,
            stringutil.join_values(report.missing, separator=';', empty=''),
            report.h,
        ])
    return buffer.getvalue()



def parse_csv(text: str) -> list[DifferenceReport]:
    reports = []
    for record in csv.DictReader(io.StringIO(text)):
        reports.append(DifferenceReport(
            k=int(record['k']),
            p_k=int(record['p_k']),
            h_prev=int(record['h_prev']) if record['h_prev'] else None,
            n_min=int(record['n_min']),
            missing=tuple(stringutil.split_values(record['missing'], separator=';', empty='')),
            h=int(record['h']),
        ))
    return reports



def render_json(reports: Sequence[DifferenceReport]) -> str:
    return json.dumps([report.to_dict() for report in reports], indent=2) + '\n'



def parse_json(text: str) -> list[DifferenceReport]:
    return [DifferenceReport.from_dict(item) for item in json.loads(text)]



def render_reports(reports: Sequence[DifferenceReport], format: str) -> str:
    """
    Render rows in one of the output formats

    :param reports: Rows to render
    :param format: `table`, `csv` or `json`
    """
    renderers = {
        TABLE: render_table,
        CSV: render_csv,
        JSON: render_json,
    }
    if format not in renderers:
        raise ValueError(f'Unknown output format: {format}')
    return renderers[format](reports)



def render_spectrum(spectrum: GapSpectrum) -> str:
    gaps = stringutil.join_values(sorted(spectrum.gaps))
    missing = stringutil.join_values(spectrum.missing)
    return (f'k={spectrum.k}\n'
            f'gaps: {gaps}\n'
            f'n_min: {spectrum.n_min}\n'
            f'n_max: {spectrum.n_max}\n'
            f'missing: {missing}\n')



def render_conjectures(flags: Sequence[ConjectureFlags]) -> str:
    def mark(value: bool) -> str:
        return 'yes' if value else 'NO'

    lines = ['k | h(k-1) <= N_min(k) | 2*p_(k-1) <= N_min(k) | 2k <= N_min(k) | equivalence']
    for flag in flags:
        lines.append(' | '.join([
            str(flag.k),
            mark(flag.conjecture_holds),
            mark(flag.de_polignac_holds),
            mark(flag.corollary_holds),
            mark(flag.equivalence_holds),
        ]))
    return '\n'.join(lines) + '\n'
