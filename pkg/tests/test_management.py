import copy
import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest.mock import patch

from django.core.management import call_command, get_commands
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from borcherds import data
from borcherds.management import execute_from_command_line

LEHMER = [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]


def expected_with(section, key, value, directory):
    """Write a copy of the manifest with one value changed, and return its path."""
    document = copy.deepcopy(data.expected())
    document[section][key] = value
    path = Path(directory) / "expected.json"
    path.write_text(json.dumps(document))
    return path


class CommandLineTests(SimpleTestCase):
    def test_commands(self):
        commands = sorted(
            name for name, app in get_commands().items() if app == "borcherds"
        )
        self.assertEqual(
            commands, ["enriques", "entropy", "group", "hessian", "run_all"]
        )

    def test_help(self):
        with patch("sys.stdout", new_callable=StringIO) as out:
            execute_from_command_line(["borcherds"])
        self.assertIn("Available subcommands:", out.getvalue())
        self.assertIn("[borcherds]", out.getvalue())
        self.assertIn("    run_all", out.getvalue())

    def test_unknown_command(self):
        with patch("sys.stderr", new_callable=StringIO) as err:
            with self.assertRaises(SystemExit) as cm:
                execute_from_command_line(["borcherds", "nope"])
        self.assertEqual(cm.exception.code, 1)
        self.assertIn("Unknown command: 'nope'", err.getvalue())

    def test_command_error_exits(self):
        with patch("sys.stderr", new_callable=StringIO) as err:
            with self.assertRaises(SystemExit) as cm:
                execute_from_command_line(["borcherds", "group", "kernel-gens"])
        self.assertEqual(cm.exception.code, 1)
        self.assertIn("CommandError: kernel-gens needs --out FILE.", err.getvalue())

    def test_call_unknown_command(self):
        with self.assertRaisesMessage(CommandError, "Unknown command: 'nope'"):
            call_command("nope")


class GroupCommandTests(SimpleTestCase):
    def test_coxeter(self):
        out = StringIO()
        call_command("group", "coxeter", stdout=out)
        self.assertIn("order of ρ(c)", out.getvalue())
        self.assertIn("1.176280", out.getvalue())
        self.assertNotIn("FAILED", out.getvalue())

    def test_quiet(self):
        out = StringIO()
        call_command("group", "coxeter", verbosity=0, stdout=out)
        self.assertEqual(out.getvalue(), "")

    def test_order_51840(self):
        out = StringIO()
        call_command("group", "order-51840", stdout=out)
        self.assertIn("51840", out.getvalue())

    def test_json(self):
        with tempfile.TemporaryDirectory() as directory:
            call_command("group", "coxeter", json=directory, stdout=StringIO())
            record = json.loads((Path(directory) / "group-coxeter.json").read_text())
        self.assertEqual(record["salem"], LEHMER)
        self.assertEqual(record["lambda"], "1.176280")

    def test_failed_check(self):
        out = StringIO()
        with tempfile.TemporaryDirectory() as directory:
            path = expected_with("groups", "coxeter_image_order", 17, directory)
            with override_settings(BORCHERDS_EXPECTED_FILE=path):
                with self.assertRaisesMessage(CommandError, "1 of 4 checks failed"):
                    call_command("group", "coxeter", verbosity=0, stdout=out)
        self.assertIn("FAILED", out.getvalue())
        self.assertNotIn("λ(c)", out.getvalue())

    def test_kernel_gens_needs_out(self):
        with self.assertRaises(CommandError):
            call_command("group", "kernel-gens", stdout=StringIO())

    def test_kernel_gens_and_entropy(self):
        with tempfile.TemporaryDirectory() as directory:
            target = Path(directory) / "kernel.json"
            call_command(
                "group", "kernel-gens", out=str(target), limit=3, stdout=StringIO()
            )
            generators = data.load_matrices(target)
            self.assertEqual(len(generators), 3)
            for label, matrix in generators.items():
                self.assertTrue(all(letter[0] in "gs" for letter in label.split("·")))
                self.assertEqual(len(matrix), 10)
            call_command(
                "entropy",
                generators=str(target),
                budget=5,
                max_length=3,
                seed=4,
                json=directory,
                stdout=StringIO(),
            )
            record = json.loads((Path(directory) / "entropy.json").read_text())
        for entry in record.values():
            self.assertTrue(all(word in generators for word in entry["word"]))

    def test_missing_generators_file(self):
        with self.assertRaises(CommandError):
            call_command(
                "entropy", generators="/nonexistent/kernel.json", stdout=StringIO()
            )


class RunAllCommandTests(SimpleTestCase):
    def test_only_data_is_reproducible(self):
        outputs, records = [], []
        with tempfile.TemporaryDirectory() as directory:
            for run in ("first", "second"):
                out = StringIO()
                target = Path(directory) / run
                call_command("run_all", only=["data"], json=str(target), stdout=out)
                outputs.append(out.getvalue())
                records.append((target / "data.json").read_bytes())
        self.assertEqual(outputs[0], "[ok] data\n")
        self.assertEqual(outputs[0], outputs[1])
        self.assertEqual(records[0], records[1])
        self.assertNotIn(b"seconds", records[0])

    def test_failed_stage(self):
        out = StringIO()
        with tempfile.TemporaryDirectory() as directory:
            path = expected_with("data", "sx_determinant", 48, directory)
            with override_settings(BORCHERDS_EXPECTED_FILE=path):
                with self.assertRaisesMessage(CommandError, "Stages failed: data."):
                    call_command("run_all", only=["data"], json=directory, stdout=out)
            record = json.loads((Path(directory) / "data.json").read_text())
        self.assertIn("[FAILED] data", out.getvalue())
        self.assertFalse(record["passed"])
        self.assertEqual(record["error"], "")

    def test_unknown_stage(self):
        with self.assertRaisesMessage(CommandError, "invalid choice: 'nope'"):
            call_command("run_all", "--only", "nope")


class EnriquesCommandTests(SimpleTestCase):
    def test_curves(self):
        out = StringIO()
        with tempfile.TemporaryDirectory() as directory:
            call_command("enriques", "curves", max_degree=5, json=directory, stdout=out)
            record = json.loads((Path(directory) / "curves.json").read_text())
        self.assertIn("|R_1|", out.getvalue())
        self.assertNotIn("FAILED", out.getvalue())
        self.assertEqual(record["counts"]["1"], 10)
        self.assertEqual(record["counts"]["5"], 10)
