import json
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1]


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def main():
    failures = []

    def expect(cond, what):
        if not cond:
            failures.append(what)

    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "ff.json")
        r = run("ff", "--p", "3", "--n", "15", "--out", out)
        expect(r.returncode == 0, "ff 3 15 exit %d" % r.returncode)
        expect(json.load(open(out))["verification"]["pass"], "ff 3 15 gram")

        r = run("ff", "--p", "5", "--n", "4")
        expect(r.returncode == 2, "ff 5 4 exit %d" % r.returncode)
        expect("[F:E] is odd" in r.stderr, "ff 5 4 message: " + r.stderr)

        r = run("ff", "--p", "2", "--n", "4")
        expect(r.returncode == 2 and "4" in r.stderr, "ff 2 4")
        expect(run("ff", "--p", "2", "--n", "6").returncode == 0, "ff 2 6")

        r = run("local", "tame", "--p", "7", "--d", "3", "--prec", "48")
        expect(r.returncode == 0, "tame 7 3")
        r = run("local", "wild", "--p", "3", "--prec", "48")
        expect(r.returncode == 0, "wild 3")
        expect(len(json.loads(r.stdout)["variants"]) == 2, "wild variants")
        expect(run("local", "tame", "--p", "3", "--d", "3").returncode == 2, "tame 3 3")

        r = run("local", "tame", "--p", "11", "--d", "5", "--prec", "4", "--guard", "0")
        expect(r.returncode == 3, "precision exit %d" % r.returncode)
        expect("--prec" in r.stderr, "precision hint")

        env = dict(os.environ, SDNB_PREC="24")
        r = run("local", "tame", "--p", "7", "--d", "3", env=env)
        expect(json.loads(r.stdout)["parameters"]["precision"] == 24, "SDNB_PREC default")

        expect(run("ff", "--p", "3").returncode == 2, "missing flag")
        expect(run("bogus").returncode == 2, "unknown subcommand")
        expect(run("verify", "--in", os.path.join(tmp, "missing.json")).returncode == 2,
               "missing file")

        r = run("oracle", "--p", "3", "--m", "3")
        expect(r.returncode == 0, "oracle 3 3")
        doc = json.loads(r.stdout)
        expect(doc["constructed_is_member"] and doc["count"] > 0, "oracle membership")
        r = run("oracle", "--p", "5", "--m", "2")
        expect(r.returncode == 0 and json.loads(r.stdout)["count"] == 0, "oracle 5 2")

    for f in failures:
        print("FAIL", f)
    print("cli checks:", "ok" if not failures else "%d failed" % len(failures))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
