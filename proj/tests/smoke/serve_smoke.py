"""Starts `evidentia serve` on an ephemeral port, drives one consultation over
HTTP, stops it with SIGTERM and checks that the session was persisted."""

import json
import re
import signal
import subprocess
import sys
import tempfile
import urllib.request
from pathlib import Path


def request(base, method, path, body=None):
    data = None if body is None else json.dumps(body).encode()
    req = urllib.request.Request(base + path, data=data, method=method,
                                 headers={"Content-Type": "application/json"})
    with urllib.request.urlopen(req, timeout=5) as resp:
        return resp.status, json.loads(resp.read())


def main(cli, kb):
    with tempfile.TemporaryDirectory() as tmp:
        store = Path(tmp) / "sessions.json"
        proc = subprocess.Popen(
            [cli, "serve", "--kb", kb, "--listen", "127.0.0.1:0", "--store", str(store)],
            stderr=subprocess.STDOUT, stdout=subprocess.PIPE, text=True)
        try:
            port = None
            for line in proc.stdout:
                match = re.search(r"listening on http://127\.0\.0\.1:(\d+)", line)
                if match:
                    port = int(match.group(1))
                    break
            assert port, "server did not report its port"
            base = f"http://127.0.0.1:{port}"

            status, created = request(base, "POST", "/sessions")
            assert status == 201, status
            sid = created["id"]
            for symptom in ["depression", "combs_wattle_bluish", "swollen_face",
                            "narrow_eyes", "balance_disorders"]:
                status, _ = request(base, "POST", f"/sessions/{sid}/symptoms", {"id": symptom})
                assert status == 200, (symptom, status)
            _, report = request(base, "GET", f"/sessions/{sid}/report")
            assert report["top"]["set"] == ["AI"], report["top"]
            assert abs(report["top"]["mass"] - 0.58726) <= 1e-4, report["top"]
        finally:
            proc.send_signal(signal.SIGTERM)
            code = proc.wait(timeout=10)
            proc.stdout.close()
        assert code == 0, f"serve exited {code}"
        saved = json.loads(store.read_text())
        assert [s["id"] for s in saved["sessions"]] == [sid], saved
        assert len(saved["sessions"][0]["asserted"]) == 5, saved
    print("serve smoke test passed")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
