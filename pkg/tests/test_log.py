#!/usr/bin/env python


import datetime
import os.path
import tempfile
import unittest

from unittest import mock

import xmlrunner

import stableset.base
import stableset.base.config as config
import stableset.base.write_log as write_log


# fake suite class for logging purposes
class FakeRun:
    no_log = ("secret",)

    def __init__(self):
        self.max_n = 4
        self.seed = 7
        self.secret = "hidden"
        self.progress_update = print


class LogTest(unittest.TestCase):
    def test_fill_log(self):
        info = write_log.fill_log(FakeRun())

        self.assertEqual(info["stableset version"], stableset.base.version)
        self.assertEqual(info["suite"], f"{__name__}.FakeRun")
        self.assertEqual(set(info), {"stableset version", "suite", "platform", "Arguments"})
        self.assertEqual(info["Arguments"], "max_n = 4,seed = 7")

    def test_write_read_error(self):
        info = write_log.fill_log(FakeRun())
        info["test"] = "unittest"
        # give our run a date
        info["Tstart"] = datetime.datetime(1953, 3, 24)
        info["Pre Test Notes"] = "Starting run, hopefully nothing goes too wrong\n"

        # make a temp dir to store logs in
        with tempfile.TemporaryDirectory() as tmp_dir:

            write_log.pre(info, outdir=tmp_dir)
            log_path = os.path.join(tmp_dir, write_log.LOG_NAME)
            self.assertTrue(os.path.exists(log_path))
            pre_size = os.stat(log_path).st_size

            # add error notes
            info["Error Notes"] = "Things went horribly wrong\n"

            write_log.post(info, outdir=tmp_dir)
            self.assertGreater(os.stat(log_path).st_size, pre_size)

            entries = write_log.read_entries(tmp_dir)

        self.assertEqual(len(entries), 1)
        entry = entries[0]
        self.assertEqual(entry["test"], "unittest")
        self.assertEqual(entry["started"], "24-Mar-1953 00:00:00")
        self.assertTrue(entry["complete"])
        self.assertEqual(entry["pre_notes"], info["Pre Test Notes"])
        self.assertEqual(entry["error_notes"], info["Error Notes"])
        self.assertNotIn("post_notes", entry)
        self.assertEqual(entry["Arguments"], info["Arguments"])

    def test_write_read_normal(self):
        info = {"test": "first", "Tstart": datetime.datetime(2001, 1, 2, 3, 4, 5)}

        with tempfile.TemporaryDirectory() as tmp_dir:
            write_log.pre(info, outdir=tmp_dir)
            info["Post Test Notes"] = "all good\nsecond line"
            write_log.post(info, outdir=tmp_dir)

            # an unfinished second run
            write_log.pre({"test": "second", "Tstart": datetime.datetime(2001, 1, 3)}, outdir=tmp_dir)

            entries = write_log.read_entries(tmp_dir)

        self.assertEqual([e["test"] for e in entries], ["first", "second"])
        self.assertEqual(entries[0]["post_notes"], "all good\nsecond line\n")
        self.assertTrue(entries[0]["complete"])
        self.assertFalse(entries[1]["complete"])
        self.assertEqual(entries[1]["pre_notes"], "")


class ConfigTest(unittest.TestCase):
    def setUp(self):
        tmp = tempfile.TemporaryDirectory()
        self.addCleanup(tmp.cleanup)
        self.path = os.path.join(tmp.name, "config.ini")

    def test_defaults(self):
        with mock.patch.dict(os.environ, {}, clear=False):
            os.environ.pop(config.NODE_CAP_ENV, None)
            self.assertEqual(config.load_config(self.path), config.DEFAULTS)

    def test_set_and_load(self):
        config.set_config("seed", 42, path=self.path)
        config.set_config("jobs", "3", path=self.path)
        values = config.load_config(self.path)
        self.assertEqual(values["seed"], 42)
        self.assertEqual(values["jobs"], 3)
        self.assertEqual(values["samples"], config.DEFAULTS["samples"])

    def test_bad_values(self):
        with self.assertRaises(ValueError):
            config.set_config("colour", 1, path=self.path)
        with self.assertRaises(ValueError):
            config.set_config("seed", "many", path=self.path)

        with open(self.path, "w") as f:
            f.write("[defaults]\nsamples = lots\n")
        with self.assertRaises(ValueError):
            config.load_config(self.path)

    def test_env_override(self):
        config.set_config("node_cap", 500, path=self.path)
        with mock.patch.dict(os.environ, {config.NODE_CAP_ENV: "25"}):
            self.assertEqual(config.node_cap(self.path), 25)
        with mock.patch.dict(os.environ, {config.NODE_CAP_ENV: "x"}):
            with self.assertRaises(ValueError):
                config.load_config(self.path)


if __name__ == "__main__":
    with open("log-tests.xml", "wb") as outf:
        unittest.main(
            testRunner=xmlrunner.XMLTestRunner(output=outf),
            failfast=False,
            buffer=False,
            catchbreak=False,
        )
