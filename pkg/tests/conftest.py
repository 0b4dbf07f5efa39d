"""Shared fixtures and frozen reference inputs for the suite."""

import pytest

# Pinned (key, iv) pair used by the golden-vector and regression tests.
GOLD_KEY = bytes.fromhex("000102030405060708090a0b0c0d0e0f")
GOLD_IV = bytes.fromhex("1032547698badcfe")

# First 64 keystream octets for (GOLD_KEY, GOLD_IV); frozen.
GOLD_STREAM_64 = bytes.fromhex(
    "d64701e1246a757264fd5598d0b6564e40b65b8407f13d7fa93cf7f58c9d8e15"
    "3ca2c07ec2bcf3658521b09b3bcc0b307305fd032c01973fe58856c217e34a99")


@pytest.fixture
def gold_key():
    return GOLD_KEY


@pytest.fixture
def gold_iv():
    return GOLD_IV
