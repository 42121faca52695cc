import json
import random

import pytest
from conftest import make_roster, named_params_for, run_pipeline

from msdmv import serial
from msdmv.eccurve import Point
from msdmv.errors import ParameterError
from msdmv.ledger import demo_chain


@pytest.mark.parametrize("scheme", serial.SCHEMES)
def test_params_round_trip(scheme):
    params = named_params_for(scheme, "paper-ex1")
    record = serial.params_to_json(scheme, params)
    assert record["scheme"] == scheme
    assert serial.params_from_json(json.loads(serial.dumps(record))) == params


@pytest.mark.parametrize("scheme", serial.SCHEMES)
def test_roster_round_trip(scheme):
    params = named_params_for(scheme, "paper-ex1")
    rng = random.Random(1)
    signers, _ = make_roster(scheme, params, 3, 1, rng)
    record = serial.roster_to_json(scheme, "A", signers)
    back_scheme, side, keys = serial.roster_from_json(json.loads(serial.dumps(record)))
    assert (back_scheme, side) == (scheme, "A")
    assert keys == signers


@pytest.mark.parametrize("scheme", serial.SCHEMES)
def test_signature_round_trip(scheme):
    params = named_params_for(scheme, "paper-ex1")
    rng = random.Random(2)
    signers, verifiers = make_roster(scheme, params, 2, 2, rng)
    run = run_pipeline(scheme, params, signers, verifiers, b"serialize me", rng)
    record = serial.signature_to_json(scheme, run.signature)
    assert serial.signature_from_json(json.loads(serial.dumps(record))) == run.signature


def test_s1_signature_record_embeds_context():
    params = named_params_for("s1", "paper-ex1")
    record = serial.s1_signature_record(params, u=5, v=6, sigma=4)
    assert set(record) == {"scheme", "sigma", "p", "g", "q", "h", "u", "v"}
    assert record["u"] == "5" and record["sigma"] == "4"
    assert serial.signature_from_json(record) == 4


def test_point_encoding():
    assert serial.point_to_json(Point(22, 151)) == {"x": "22", "y": "151"}
    assert serial.point_to_json(Point()) == "O"
    assert serial.point_from_json({"x": "22", "y": "151"}) == Point(22, 151)
    assert serial.point_from_json("O").is_infinity
    with pytest.raises(ParameterError):
        serial.point_from_json({"x": "22"})


def test_all_integers_are_decimal_strings():
    params = named_params_for("s2", "paper-ex1")
    record = serial.params_to_json("s2", params)
    assert record["p"] == "211"
    assert record["n_a"] == {"p_factor": "3", "q_factor": "5"}
    flat = json.dumps(record)
    assert ": 211" not in flat  # no bare JSON numbers for protocol values


def test_chain_round_trip():
    blocks, *_ = demo_chain(seed=0)
    text = serial.chain_to_jsonl(blocks)
    assert len(text.strip().splitlines()) == 2
    back = serial.chain_from_jsonl(text)
    assert back == blocks


def test_dumps_is_canonical():
    assert serial.dumps({"b": 1, "a": 2}) == '{"a":2,"b":1}'


def test_bad_records_raise_parameter_error():
    with pytest.raises(ParameterError):
        serial.params_from_json({"scheme": "s9"})
    with pytest.raises(ParameterError):
        serial.signature_from_json({"scheme": "s2", "r": "x", "s": "1", "t": "1", "u_bar": "1"})
    with pytest.raises(ParameterError):
        serial.roster_from_json({"scheme": "s2", "side": "A", "members": []})
