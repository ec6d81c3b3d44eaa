import json

import sdnb

doc = sdnb.construct_ff(3, 5)
assert doc["schema_version"] == sdnb.SCHEMA_VERSION
assert doc["verification"]["pass"]
ok, messages = sdnb.verify(doc)
assert ok, messages

tame = sdnb.local_tame(7, 3, precision=32)
assert tame["verification"]["valuation"] == -1
assert sdnb.verify(json.dumps(tame))[0]

wild = sdnb.local_wild(3, precision=32)
assert len(wild["variants"]) == 2
assert sdnb.verify(wild)[0]

assert sdnb.local_unram(3, 5, precision=32)["verification"]["pass"]
comp = sdnb.local_compose(7, 3, 3, trace_diag=True, precision=32)
assert comp["route"] == "trace-down"

assert sorted(sdnb.brute_force(3, 1)) == [[1], [2]]
assert sdnb.brute_force(5, 2) == []

for call, exc in [
    (lambda: sdnb.construct_ff(5, 4), sdnb.ExistenceError),
    (lambda: sdnb.local_tame(3, 3), sdnb.ParameterError),
    (lambda: sdnb.verify("{"), sdnb.MalformedError),
    (lambda: sdnb.local_tame(11, 5, precision=4, guard=0), sdnb.PrecisionError),
]:
    try:
        call()
    except exc:
        pass
    else:
        raise AssertionError("expected %s" % exc.__name__)

assert issubclass(sdnb.MalformedError, sdnb.ParameterError)
print("python smoke ok")
