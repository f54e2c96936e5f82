"""
Witness files: one JSON document holding verified coverings keyed by (k, m)

```json
{
    "version": 1,
    "records": [
        {"k": 6, "m": 22, "window_start": 1, "window_length": 10,
         "classes": [[3, 1], [5, 2], ...], "form": "odd-prime"}
    ]
}
```
"""
from ..constants import FULL, ODD_PRIME, WITNESS_FILE_VERSION
from ..covering import Covering, ResidueClass, Window, covering_to_coprime_pair
from ..ntcore import primes_upto_index
from ..utils import fileutil
from dataclasses import dataclass
from typing import Iterable
import json


@dataclass(frozen=True)
class WitnessRecord:
    k: int
    m: int
    covering: Covering
    form: str = ODD_PRIME

    def to_dict(self) -> dict:
        return {
            'k': self.k,
            'm': self.m,
            'window_start': self.covering.window.start,
            'window_length': self.covering.window.length,
            'classes': [[c.p, c.a] for c in self.covering.classes],
            'form': self.form,
        }



    @classmethod
    def from_dict(cls, data: dict) -> 'WitnessRecord':
        classes = tuple(ResidueClass(int(a), int(p)) for p, a in data['classes'])
        window = Window(int(data['window_start']), int(data['window_length']))
        return cls(int(data['k']), int(data['m']), Covering(classes, window), data.get('form', ODD_PRIME))



    def describe(self) -> str:
        return f'k={self.k} m={self.m} form={self.form}'



def verify_record(record: WitnessRecord) -> bool:
    """
    Check that the covering certifies m at k: restricted covering of the
    right window over the right primes, and the coprime pair it gives has
    difference m
    """
    primes = primes_upto_index(record.k)
    if record.form == ODD_PRIME:
        expected_primes, expected_length = primes.odd().primes, record.m // 2 - 1
    elif record.form == FULL:
        expected_primes, expected_length = primes.primes, record.m - 1
    else:
        return False
    cov = record.covering
    if record.m % 2 or cov.moduli != expected_primes:
        return False
    if cov.window != Window(1, expected_length) or not cov.verify_restricted():
        return False
    return covering_to_coprime_pair(cov, primes).gap == record.m



def write_witness_file(path: str, records: Iterable[WitnessRecord]):
    """
    Write records to a witness file

    :param path: Output file path
    :param records: Records to store
    """
    fileutil.ensure_parent_directory(path)
    document = {
        'version': WITNESS_FILE_VERSION,
        'records': [record.to_dict() for record in records],
    }
    with open(path, 'w') as file:
        json.dump(document, file, indent=1)



def load_witness_file(path: str) -> list[dict]:
    """
    Read the raw records of a witness file

    :param path: Witness file path
    :raises ValueError: If the document is not a witness file
    """
    with open(path, 'r') as file:
        document = json.load(file)
    if not isinstance(document, dict) or 'records' not in document:
        raise ValueError('Not a witness file: missing records')
    if document.get('version') != WITNESS_FILE_VERSION:
        raise ValueError(f'Unsupported witness file version: {document.get("version")}')
    if not isinstance(document['records'], list):
        raise ValueError('Not a witness file: records must be a list')
    return document['records']
