from cbsum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_label_cycle(capsys):
    code, out, _ = run(capsys, "label", "family=cycle n=100")
    assert code == 0
    assert "cbs=100" in out and "n=100" in out and "seed=42" in out


def test_label_writes_labeling(capsys, tmp_path):
    path = str(tmp_path / "lab.txt")
    code, out, _ = run(capsys, "label", "family=path n=5", "--output", path)
    assert code == 0
    lines = open(path).read().splitlines()
    assert len(lines) == 5
    assert sorted(int(line.split()[1]) for line in lines) == [0, 1, 2, 3, 4]


def test_label_dot_output(capsys, tmp_path):
    dot = str(tmp_path / "g.dot")
    code, _, _ = run(capsys, "label", "family=cycle n=6", "--dot", dot)
    assert code == 0
    assert "graph g {" in open(dot).read()


def test_reference_wheel(capsys):
    code, out, _ = run(capsys, "reference", "family=wheel n=6")
    assert code == 0
    assert out.strip() == "exact_optimum 15"


def test_reference_upper_bound(capsys):
    code, out, _ = run(capsys, "reference", "family=pk m=5 n=5")
    assert code == 0
    assert out.strip() == "upper_bound 395"


def test_oracle_cycle(capsys):
    code, out, _ = run(capsys, "oracle", "family=cycle n=5")
    assert code == 0
    assert out.splitlines()[0] == "optimum 5"
    assert len(out.splitlines()) == 6


def test_oracle_refuses_large(capsys):
    code, _, err = run(capsys, "oracle", "family=cycle n=10")
    assert code == 4
    assert "oracle" in err


def test_generate_and_convert_round_trip(capsys, tmp_path):
    edges = str(tmp_path / "c7.edges")
    code, out, _ = run(capsys, "generate", "family=cycle n=7", "--out", edges)
    assert code == 0 and "m=7" in out
    dot = str(tmp_path / "c7.dot")
    code, _, _ = run(capsys, "convert", edges, dot)
    assert code == 0
    assert open(dot).read().count("--") == 7


def test_label_matrix_market(capsys, tmp_path):
    mm = tmp_path / "t.mtx"
    mm.write_text("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 3\n2 1\n3 1\n3 2\n")
    code, out, _ = run(capsys, "label", str(mm))
    assert code == 0
    assert "n=3 m=3" in out


def test_format_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.mtx"
    bad.write_text("no header\n")
    code, _, err = run(capsys, "label", str(bad))
    assert code == 3
    assert "error" in err


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "label", "family=cycle n=2")
    assert code == 4
    assert "error" in err


def test_bench_csv(capsys, tmp_path):
    csv_path = str(tmp_path / "bench.csv")
    code, out, _ = run(
        capsys,
        "bench",
        "family=path n=30",
        "family=wheel n=8",
        "--reps",
        "10",
        "--csv",
        csv_path,
    )
    assert code == 0
    lines = open(csv_path).read().splitlines()
    assert len(lines) == 3
    path_row = lines[1].split(",")
    assert path_row[3] == "29" and path_row[4] == "0"
    assert path_row[7] == "exact_optimum"
    wheel_row = lines[2].split(",")
    assert wheel_row[3] == "24"  # 8 + floor(64/4)
    assert "seed=42" in out


def test_bench_deterministic_output(capsys, tmp_path):
    a, b = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
    run(capsys, "bench", "family=er n=30 p=0.4", "--reps", "5", "--csv", a)
    run(capsys, "bench", "family=er n=30 p=0.4", "--reps", "5", "--csv", b)
    strip = lambda p: ["," .join(line.split(",")[:-1]) for line in open(p)]
    assert strip(a) == strip(b)  # identical up to the timing column


def test_robustness_cli(capsys):
    code, out, _ = run(
        capsys, "robustness", "family=path n=20", "--k", "1,2", "--reps", "4"
    )
    assert code == 0
    assert "rd=0.00" in out


def test_label_weighted_edge_list(capsys, tmp_path):
    f = tmp_path / "w.txt"
    f.write_text("a b 2.0\nb c 1.0\nc a 1.5\n")
    code, out, _ = run(capsys, "label", str(f), "--weighted")
    assert code == 0
    assert "n=3 m=3" in out
    assert "cbs=4.5" in out  # triangle: every labeling scores w_total
