# -*- coding: utf-8 -*-

"""
A directory of cached report documents.

Entries are keyed by a hash of the input hash, the command with its
options, the caps and the tool version. A hit returns the stored text
unchanged.

Author: Gertjan van den Burg

"""

import hashlib
import json
import os
import tempfile

from .__version__ import __version__


def cache_key(input_hash, command, caps, options=None):
    payload = json.dumps(
        dict(
            input_hash=input_hash,
            command=command,
            caps=caps.to_dict(),
            options=options or {},
            version=__version__,
        ),
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class ReportCache(object):
    def __init__(self, cache_dir):
        self.cache_dir = cache_dir

    @classmethod
    def from_caps(cls, caps):
        """A cache for the directory of the caps, or None when it has none."""
        if not caps.cache_dir:
            return None
        return cls(caps.cache_dir)

    def path(self, key):
        return os.path.join(self.cache_dir, key + ".json")

    def get(self, key, verbose=False):
        log = lambda *a, **kw: print(*a, **kw) if verbose else None
        path = self.path(key)
        if not os.path.isfile(path):
            log("Cache miss: %s" % key)
            return None
        log("Cache hit: %s" % key)
        with open(path, "r", encoding="utf-8", newline="") as fid:
            return fid.read()

    def put(self, key, text):
        os.makedirs(self.cache_dir, exist_ok=True)
        # entries appear atomically
        fd, tmp = tempfile.mkstemp(dir=self.cache_dir, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fid:
            fid.write(text)
        os.replace(tmp, self.path(key))
        return self.path(key)
