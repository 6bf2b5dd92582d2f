# 2026 bhlearn developers

import io

import numpy as np
import pandas
from pytest import mark

from bhlearn import repo, learn, harness, i_o, main
from bhlearn.growth import bh_model

LEARN = ['learn', '--n', '6', '--d', '2', '--eps', '0.4', '--delta', '0.2', '--seed', '42', '--trials', '6',
         '--bh-model', 'unit']


def _csv(text):
    return pandas.read_csv(io.StringIO(text))


def test_bounds(capsys):
    assert main.run(['bounds', '--d', '5']) == 0
    df = _csv(capsys.readouterr().out)
    assert list(df.columns) == main.BOUNDS_COLUMNS
    assert list(df['l']) == [1, 2, 3, 4, 5]
    assert df['markov_bound'].iloc[0] == 5.0 and df['weak_bound'].iloc[1] == 12.5


def test_learn(capsys):
    argv = ['learn', '--n', '10', '--d', '2', '--eps', '0.3', '--delta', '0.2', '--algo', 'bh',
            '--target', 'random:7', '--seed', '42', '--trials', '50', '--bh-model', 'explicit:1']
    assert main.run(argv) == 0
    df = _csv(capsys.readouterr().out)
    assert len(df) == 50 and list(df['trial']) == list(range(50))
    assert (df['queries_used'] == df['N']).all()


@mark.parametrize('argv, flag', [
    (['learn', '--n', '6', '--d', '2', '--eps', '1.5', '--delta', '0.2', '--seed', '1'], '--eps'),
    (['learn', '--n', '6', '--d', '2', '--eps', '0.5', '--delta', '0', '--seed', '1'], '--delta'),
    (['learn', '--n', '6', '--d', '2', '--eps', '0.5', '--delta', '0.2'], '--seed'),
    (['learn', '--n', '6', '--d', '7', '--eps', '0.5', '--delta', '0.2', '--seed', '1'], '--d'),
    (['learn', '--n', '6', '--d', '2', '--eps', '0.5', '--delta', '0.2', '--seed', '1', '--N', '0'], '--N'),
    (['learn', '--n', '6', '--d', '2', '--eps', '0.5', '--delta', '0.2', '--seed', '1',
      '--bh-model', 'dmp:-1'], '--bh-model'),
    (['collision', '--n', '1', '--N', '3', '--seed', '1'], '--n'),
    (['audit', '--n', '6', '--d', '2', '--seed', '1', '--corpus', 'sparse'], '--corpus'),
    (['scan', '--d', '2', '--eps', '0.5', '--delta', '0.2', '--ns', '1', '8', '--seed', '1'], '--ns'),
])
def test_usage_errors(capsys, argv, flag):
    assert main.run(argv) == 2
    err = capsys.readouterr().err.strip()
    assert len(err.splitlines()) == 1 and flag in err
    assert err.startswith('bhlearn: error:')


def test_eps_message_cites_range(capsys):
    main.run(['learn', '--n', '6', '--d', '2', '--eps', '1.5', '--delta', '0.2', '--seed', '1'])
    assert '(0,1)' in capsys.readouterr().err


def test_unknown_command():
    assert main.run(['fit', '--n', '3']) == 2
    assert main.run(['-v']) == 2


def test_version(capsys):
    assert main.run(['-version']) == 0
    assert 'bhlearn' in capsys.readouterr().out


def test_runtime_error_exits_one(capsys):
    argv = ['learn', '--n', '40', '--d', '1', '--eps', '0.5', '--delta', '0.2', '--seed', '1', '--trials', '2']
    assert main.run(argv) == 1
    assert 'random targets need' in capsys.readouterr().err


def test_same_seed_same_bytes(capsys, monkeypatch):
    outputs = list()
    for threads in ('1', '4', '1'):
        monkeypatch.setenv(repo.THREADS_ENV, threads)
        assert main.run(LEARN) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1] == outputs[2]


def test_thread_flag(capsys):
    assert main.run(['-nt', '3'] + LEARN) == 0
    threaded = capsys.readouterr().out
    assert main.run(['-nt', '1'] + LEARN) == 0
    assert capsys.readouterr().out == threaded


def test_out_file_and_log(tmp_path, capsys):
    target = tmp_path / 'trials.csv'
    assert main.run(['-i'] + LEARN + ['--out', str(target), '--timing']) == 0
    assert capsys.readouterr().out == ''
    df = pandas.read_csv(target)
    assert 'wall_time' in df.columns and len(df) == 6
    assert 'master seed 42' in (tmp_path / 'trials.csv.log').read_text()


def test_learn_samples_out(tmp_path, capsys):
    target = tmp_path / 'samples.csv'
    assert main.run(LEARN + ['--samples-out', str(target)]) == 0
    df = _csv(capsys.readouterr().out)
    batch = i_o.read_samples(target, 6)
    assert len(batch) == df['N'].iloc[0] == df['queries_used'].iloc[0]
    assert np.all(np.abs(batch.values) <= 1 + 1e-12)


def test_out_directory_missing(tmp_path, capsys):
    target = tmp_path / 'missing_dir' / 'bounds.csv'
    assert main.run(['bounds', '--d', '3', '--out', str(target)]) == 1
    captured = capsys.readouterr()
    assert captured.out == '' and 'cannot open log file' in captured.err
    assert not target.parent.exists()


def test_experiment_file(tmp_path, capsys):
    experiment = tmp_path / 'cell.txt'
    experiment.write_text('# one small cell\nn=6\nd=1\neps=0.5\ndelta=0.2\nseed=3\n'
                          'trials=4  # few\nalgo=lmn\nblock=8\n')
    assert main.run(['-cf', str(experiment), 'learn']) == 0
    df = _csv(capsys.readouterr().out)
    assert len(df) == 4 and df['a'].isna().all()
    assert repo.settings.block == 8

    # the command line wins
    assert main.run(['-cf', str(experiment), 'learn', '--trials', '2']) == 0
    assert len(_csv(capsys.readouterr().out)) == 2


def test_experiment_file_errors(tmp_path):
    experiment = tmp_path / 'cell.txt'
    experiment.write_text('n=6\nd=1\ncolour=red\n')
    assert main.run(['-cf', str(experiment), 'learn']) == 2
    experiment.write_text('n=six\n')
    assert main.run(['-cf', str(experiment), 'learn']) == 2
    assert main.run(['-cf', str(tmp_path / 'missing.txt'), 'learn']) == 2


def test_test_config(capsys):
    assert main.run(['-test', 'bounds', '--d', '3']) == 0
    assert repo.settings.n_max == 16 and repo.settings.max_threads == 1
    assert '--TEST RUN--' in capsys.readouterr().err


def test_scan(capsys):
    argv = ['scan', '--d', '1', '--eps', '0.5', '--delta', '0.2', '--ns', '8', '64', '--seed', '2', '--trials', '2']
    assert main.run(argv) == 0
    df = _csv(capsys.readouterr().out)
    assert list(df['n']) == [8, 64] and (df['successes'] <= df['trials']).all()


def test_grid(capsys):
    argv = ['grid', '--n', '5', '6', '--d', '1', '--eps', '0.5', '--delta', '0.2', '--algo', 'lmn', 'bh',
            '--seed', '1', '--trials', '2', '--bh-model', 'explicit:1']
    assert main.run(argv) == 0
    df = _csv(capsys.readouterr().out)
    assert list(df.columns) == harness.COLUMNS['scan-n']
    assert list(df['n']) == [5, 5, 6, 6] and list(df['algo']) == ['lmn', 'bh', 'lmn', 'bh']
    assert (df['successes'] <= df['trials']).all()


def test_grid_experiment_file(tmp_path, capsys):
    experiment = tmp_path / 'grid.txt'
    experiment.write_text('n=5 7\nd=1, 2\neps=0.5\ndelta=0.2\nalgo=lmn\nN=20 40  # overrides\nseed=4\ntrials=2\n')
    assert main.run(['-cf', str(experiment), 'grid']) == 0
    df = _csv(capsys.readouterr().out)
    assert len(df) == 8
    assert list(df['N']) == [20, 40] * 4
    assert (df['mean_queries'] == df['N']).all()

    experiment.write_text('n=5\nd=1\neps=0.5\ndelta=0.2\nalgo=lmn fast\nseed=4\n')
    assert main.run(['-cf', str(experiment), 'grid']) == 2


@mark.parametrize('argv, flag', [
    (['grid', '--n', '6', '--d', '1', '7', '--eps', '0.5', '--delta', '0.2', '--seed', '1'], '--d'),
    (['grid', '--n', '6', '--d', '1', '--eps', '0.5', '1.5', '--delta', '0.2', '--seed', '1'], '--eps'),
    (['grid', '--n', '6', '--d', '1', '--eps', '0.5', '--delta', '0.2', '--N', '10', '0', '--seed', '1'], '--N'),
    (['grid', '--n', '6', '--d', '1', '--eps', '0.5', '--delta', '0.2'], '--seed'),
])
def test_grid_usage_errors(capsys, argv, flag):
    assert main.run(argv) == 2
    assert flag in capsys.readouterr().err


def test_collision(capsys):
    assert main.run(['collision', '--n', '16', '--N', '3', '--seed', '5', '--trials', '1000']) == 0
    row = _csv(capsys.readouterr().out).iloc[0]
    assert row['exact'] == 0.125 and bool(row['witness_found'])


def test_audit(capsys):
    assert main.run(['audit', '--n', '7', '--d', '2', '--seed', '1', '--count', '20']) == 0
    df = _csv(capsys.readouterr().out)
    assert len(df) == 20 and (df['certified_violations'] == 0).all()


def test_bh_estimate(capsys):
    assert main.run(['bh-estimate', '--n', '6', '--d', '2', '--seed', '4', '--trials', '10']) == 0
    assert _csv(capsys.readouterr().out)['max_ratio'].iloc[0] >= 1


def test_budgets(capsys):
    assert main.run(['budgets', '--n', '256', '--d', '2', '--eps', '0.25', '--delta', '0.1']) == 0
    df = _csv(capsys.readouterr().out)
    assert list(df['formula']) == ['lmn', 'theorem2-statement', 'theorem2-proof', 'theorem1']
    assert df['N'].iloc[0] == learn.lmn_sample_count(256, 2, 0.25, 0.1)
    assert df['branch'].iloc[3] in (1, 2)


def test_print_sample_budgets():
    one = bh_model('explicit', 1.0)
    df = main.print_sample_budgets(50, 1, 0.3, 0.1, one, 1.0)
    assert len(df) == 4 and list(df.columns) == main.BUDGET_COLUMNS
    proof = df.set_index('formula').loc['theorem2-proof', 'N']
    assert proof == learn.theorem2_sample_count(50, 1, 0.3, 0.1, one)[0]
    assert proof >= learn.sample_count_for_b(50, 1, 0.1, learn.choose_b(0.3, 1, one))
    assert df.equals(main.print_sample_budgets(50, 1, 0.3, 0.1, one, 1.0))


def test_print_sample_budgets_overflow():
    df = main.print_sample_budgets(60, 50, 1e-9, 0.1, bh_model('unit'), 1.0)
    rows = df.set_index('formula')
    assert rows.loc['theorem2-proof', 'N'] is None
    assert rows.loc['lmn', 'N'] is not None
