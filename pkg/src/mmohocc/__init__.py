"""mmohocc: a multi-map orbit-hopping chaotic stream cipher.

Research cipher: many chaotic orbits are iterated in binary64, visited in a
key-selected hopping order, and compressed 32 bits -> 16 bits per step into
the keystream.  Ships with its evaluation tooling (correlation scans, an
SP 800-22 subset battery, a finite-precision cycle lab) and an RC4
throughput yardstick.  Not an audited cipher; do not protect real data
with it.
"""

from . import analysis
from .container import (FormatError, decrypt_bytes, decrypt_file,
                        encrypt_bytes, encrypt_file)
from .engine import (Engine, KeystreamWord, decrypt, encrypt, extract_word,
                     keystream, start_orbit)
from .keyschedule import (HOPPING_SKEW, InitVector, KeyFormatError, MasterKey,
                          SubKey, SubKeySet, decode_subkey, encode_subkey,
                          offset_real, schedule, schedule_raw, seed_real)
from .maps import (V128, V256, V512, DomainError, MapBank, MapDescriptor,
                   bank_manifest, default_bank, is_window_free, iterate,
                   iterate_n)
from .patterns import block_structure, pattern, table
from .rc4 import BenchResult, Rc4State, bench, rc4_keystream

__version__ = "0.1.0"

__all__ = [
    "analysis",
    "Engine", "KeystreamWord", "keystream", "encrypt", "decrypt",
    "extract_word", "start_orbit",
    "MasterKey", "InitVector", "SubKey", "SubKeySet", "KeyFormatError",
    "schedule", "schedule_raw", "decode_subkey", "encode_subkey",
    "seed_real", "offset_real", "HOPPING_SKEW",
    "MapDescriptor", "MapBank", "DomainError", "default_bank",
    "is_window_free", "iterate", "iterate_n", "bank_manifest",
    "V128", "V256", "V512",
    "pattern", "table", "block_structure",
    "Rc4State", "rc4_keystream", "bench", "BenchResult",
    "FormatError", "encrypt_bytes", "decrypt_bytes",
    "encrypt_file", "decrypt_file",
    "__version__",
]
