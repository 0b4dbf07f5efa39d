"""Command-line front door.

Exit codes: 0 success, 1 usage error, 2 data or format error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import container, engine, maps, patterns, rc4
from .analysis import (BitSequence, SequenceTooShort, correlation_scan,
                       cycles, nist_subset, statespace)
from .keyschedule import IV_LEN, KeyFormatError, MasterKey, schedule_raw
from .maps import V128, V256, V512


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        raise _UsageError(message)


def _hex_bytes(text: str, what: str) -> bytes:
    try:
        return bytes.fromhex(text)
    except ValueError:
        raise KeyFormatError("%s is not valid hex" % what) from None


def _load_key(args) -> bytes:
    if getattr(args, "key_file", None):
        with open(args.key_file, "rb") as f:
            return f.read()
    if args.key is None:
        raise _UsageError("a key is required (--key or --key-file)")
    return _hex_bytes(args.key, "key")


def _out_stream(path):
    return open(path, "wb") if path else sys.stdout.buffer


def _cmd_keygen(args) -> int:
    variant = args.variant
    key = os.urandom({V128: 16, V256: 32, V512: 64}[variant])
    iv = os.urandom(IV_LEN[variant])
    print("key=%s" % key.hex())
    print("iv=%s" % iv.hex())
    return 0


def _cmd_encrypt(args) -> int:
    key = _load_key(args)
    variant = MasterKey.of(key).variant
    iv = (_hex_bytes(args.iv, "iv") if args.iv
          else os.urandom(IV_LEN[variant]))
    container.encrypt_file(key, iv, args.input, args.output)
    return 0


def _cmd_decrypt(args) -> int:
    container.decrypt_file(_load_key(args), args.input, args.output)
    return 0


def _cmd_keystream(args) -> int:
    key = _load_key(args)
    iv = _hex_bytes(args.iv, "iv")
    data = engine.keystream(key, iv, args.bytes)
    f = _out_stream(args.output)
    f.write(data)
    if f is not sys.stdout.buffer:
        f.close()
    else:
        f.flush()
    return 0


def _cmd_patterns(args) -> int:
    csv = patterns.table_csv(args.orbits)
    if args.output:
        with open(args.output, "w") as f:
            f.write(csv)
    else:
        sys.stdout.write(csv)
    return 0


def _bits_for_analysis(args) -> BitSequence:
    if args.input:
        with open(args.input, "rb") as f:
            return BitSequence.from_bytes(f.read())
    if args.key is None or args.iv is None:
        raise _UsageError("need --in FILE or both --key and --iv")
    key = _load_key(args)
    iv = _hex_bytes(args.iv, "iv")
    return BitSequence.from_bytes(engine.keystream(key, iv, args.bytes))


def _cmd_analyze(args) -> int:
    s = _bits_for_analysis(args)
    if args.correlation:
        scan = correlation_scan(s)
        if args.output:
            scan.to_csv(args.output)
        else:
            sys.stdout.write(scan.csv())
    else:
        lines = [r.record() for r in nist_subset(s)]
        text = "\n".join(lines) + "\n"
        if args.output:
            with open(args.output, "w") as f:
                f.write(text)
        else:
            sys.stdout.write(text)
    return 0


def _cmd_statespace(args) -> int:
    if args.maps is not None or args.orbits is not None:
        if args.maps is None or args.orbits is None:
            raise _UsageError("--maps and --orbits go together")
        bits = statespace.state_space_bits_uniform(args.maps, args.orbits)
        print(statespace.StateSpaceReport(bits).record())
        return 0
    key = _load_key(args)
    iv = _hex_bytes(args.iv, "iv")
    print(statespace.report(schedule_raw(key, iv)).record())
    return 0


_TOY_MAPS = ((maps.LOGISTIC, 3.99), (maps.QUADRATIC, -1.97))
_TOY = dict(n_orbits=[3, 2], n_samples=[2, 3], seeds=[0.37, -0.8],
            offsets=[0.011, 0.017], hpsns=[141, 3])


def _cmd_cyclelab(args) -> int:
    if args.engine:
        toy = [maps.MapDescriptor(k, p) for k, p in _TOY_MAPS]
        res = cycles.engine_cycle(toy, precision_bits=args.precision, **_TOY)
        print(res.record())
        return 0
    if args.map is None or args.param is None:
        raise _UsageError("need --map and --param (or --engine)")
    m = maps.MapDescriptor(args.map, args.param)
    tail, cyc = cycles.cycle_length(m, args.x0, args.precision)
    print("tail=%d cycle=%d" % (tail, cyc))
    return 0


def _cmd_bench(args) -> int:
    sizes = tuple(int(s) for s in args.sizes_kb.split(","))
    results = rc4.bench(payload_sizes_kb=sizes, trials=args.trials)
    sys.stdout.write(rc4.format_results(results))
    return 0


def _build_parser() -> _Parser:
    p = _Parser(prog="mmohocc",
                description="multi-map orbit-hopping chaotic stream cipher")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_key_opts(sp):
        sp.add_argument("--key", help="key as hex")
        sp.add_argument("--key-file", help="raw key file")
        sp.add_argument("--iv", help="IV as hex")

    sp = sub.add_parser("keygen", help="generate a random key and IV")
    sp.add_argument("--variant", choices=[V128, V256, V512], default=V128)
    sp.set_defaults(func=_cmd_keygen)

    sp = sub.add_parser("encrypt", help="encrypt a file into a container")
    add_key_opts(sp)
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--out", dest="output", required=True)
    sp.set_defaults(func=_cmd_encrypt)

    sp = sub.add_parser("decrypt", help="decrypt a container file")
    add_key_opts(sp)
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--out", dest="output", required=True)
    sp.set_defaults(func=_cmd_decrypt)

    sp = sub.add_parser("keystream", help="dump raw keystream octets")
    add_key_opts(sp)
    sp.add_argument("--bytes", type=int, required=True)
    sp.add_argument("--out", dest="output")
    sp.set_defaults(func=_cmd_keystream)

    sp = sub.add_parser("patterns", help="dump the 256-row pattern table as CSV")
    sp.add_argument("--orbits", type=int, required=True)
    sp.add_argument("--out", dest="output")
    sp.set_defaults(func=_cmd_patterns)

    sp = sub.add_parser("analyze", help="correlation scan or statistical battery")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--correlation", action="store_true")
    g.add_argument("--nist", action="store_true")
    sp.add_argument("--in", dest="input", help="packed bitstream file")
    add_key_opts(sp)
    sp.add_argument("--bytes", type=int, default=125000)
    sp.add_argument("--out", dest="output")
    sp.set_defaults(func=_cmd_analyze)

    sp = sub.add_parser("statespace", help="state-space bits and period exponent")
    add_key_opts(sp)
    sp.add_argument("--maps", type=int)
    sp.add_argument("--orbits", type=int)
    sp.set_defaults(func=_cmd_statespace)

    sp = sub.add_parser("cyclelab", help="finite-precision cycle measurement")
    sp.add_argument("--map", choices=[maps.LOGISTIC, maps.QUADRATIC])
    sp.add_argument("--param", type=float)
    sp.add_argument("--x0", type=float, default=0.1)
    sp.add_argument("--precision", type=int, default=8)
    sp.add_argument("--engine", action="store_true",
                    help="run the builtin toy multi-orbit engine instead")
    sp.set_defaults(func=_cmd_cyclelab)

    sp = sub.add_parser("bench", help="throughput comparison against RC4")
    sp.add_argument("--sizes-kb", default="584,11200,22400")
    sp.add_argument("--trials", type=int, default=5)
    sp.set_defaults(func=_cmd_bench)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError:
        return 1
    try:
        return args.func(args)
    except _UsageError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return 1
    except (KeyFormatError, container.FormatError, maps.DomainError,
            SequenceTooShort) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except (OSError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
