#!/usr/bin/env python3
"""Minimal language server used to exercise the JSON-RPC wire layer.

Speaks Content-Length framing on stdin/stdout and answers a fixed script:
definition/references return canned 0-based locations, didOpen publishes one
diagnostic that encodes the received text length.
"""
import json
import sys


def read_message(stream):
    headers = {}
    line = b""
    while True:
        line = stream.readline()
        if not line:
            return None
        line = line.rstrip(b"\r\n")
        if not line:
            break
        key, _, value = line.partition(b":")
        headers[key.strip().lower()] = value.strip()
    length = int(headers[b"content-length"])
    return json.loads(stream.read(length))


def send(obj):
    body = json.dumps(obj).encode("utf-8")
    sys.stdout.buffer.write(b"Content-Length: " + str(len(body)).encode() + b"\r\n\r\n" + body)
    sys.stdout.buffer.flush()


def main():
    stdin = sys.stdin.buffer
    root = None
    while True:
        msg = read_message(stdin)
        if msg is None:
            return
        method = msg.get("method")
        if method == "initialize":
            root = msg["params"]["rootUri"]
            send({"jsonrpc": "2.0", "id": msg["id"], "result": {"capabilities": {}}})
        elif method == "textDocument/definition":
            send({
                "jsonrpc": "2.0",
                "id": msg["id"],
                "result": [{
                    "uri": root + "/def_target.py",
                    "range": {"start": {"line": 9, "character": 4},
                              "end": {"line": 9, "character": 10}},
                }],
            })
        elif method == "textDocument/references":
            uri = msg["params"]["textDocument"]["uri"]
            pos = msg["params"]["position"]
            send({
                "jsonrpc": "2.0",
                "id": msg["id"],
                "result": [
                    {"uri": uri,
                     "range": {"start": {"line": pos["line"], "character": pos["character"]},
                               "end": {"line": pos["line"], "character": pos["character"]}}},
                    {"uri": root + "/other.py",
                     "range": {"start": {"line": 0, "character": 0},
                               "end": {"line": 0, "character": 3}}},
                ],
            })
        elif method == "textDocument/didOpen":
            doc = msg["params"]["textDocument"]
            send({
                "jsonrpc": "2.0",
                "method": "textDocument/publishDiagnostics",
                "params": {
                    "uri": doc["uri"],
                    "diagnostics": [{
                        "range": {"start": {"line": 2, "character": 0},
                                  "end": {"line": 2, "character": 1}},
                        "severity": 1,
                        "code": "fake-check",
                        "message": "doc has %d bytes" % len(doc["text"]),
                    }],
                },
            })
        elif method == "shutdown":
            send({"jsonrpc": "2.0", "id": msg["id"], "result": None})
        elif method == "exit":
            return
        elif "id" in msg:
            send({"jsonrpc": "2.0", "id": msg["id"], "result": None})


if __name__ == "__main__":
    main()
