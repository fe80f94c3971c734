"""
One habitual decision, up close
===============================

Opens a finished run and follows a single decision through the habitual
policy: five latents drawn from the state-only prior, five decoded actions,
the critic's scores and the argmax.  The same state then goes to the
diffusion teacher, and both are timed on one thread.

Usage: ``python3 demos/03_decision_up_close.py [RUN_DIR]``.  Without a
finished run in RUN_DIR (default ``runs/demo``) the mini pipeline is run
there first, which takes about a minute.
"""

import sys
from pathlib import Path

import numpy as np
from threadpoolctl import threadpool_limits

from habi import config as config_mod
from habi import inference as inf
from habi import pipeline
from habi.habitizer import load_habi_model
from habi.teacher import load_planner, plan, q_values

run_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/demo")
threadpool_limits(limits=1)
if pipeline.latest_stage_dir(run_dir, "habitize") is None:
    print(f"no finished run in {run_dir}; running the mini pipeline first")
    pipeline.run_all(config_mod.mini_config(), run_dir)
cfg = config_mod.load(run_dir / "config.txt")

hdir = pipeline.latest_stage_dir(run_dir, "habitize")
seed = cfg.run.seeds[0]
model = load_habi_model(hdir / f"seed_{seed}" / "habi_model.habi")
planner = load_planner(pipeline.latest_stage_dir(run_dir, "planner") / "planner.habi")
policy = inf.HiPolicy.from_model(model, 5, dtype=np.float32)
state = pipeline.probe_states(cfg)[0]
print(f"run {run_dir}, habitized seed {seed}, state {np.round(state, 3)}")

# Five candidates from the prior path; no teacher and no posterior involved.
rng = np.random.default_rng(0)
acts, scores = inf.hi_candidates(policy, state, rng)
teacher_q = q_values(planner, np.repeat(state[None], 5, axis=0).astype(np.float32), np.clip(acts[0], -1, 1))
print("\n  #   action              critic   teacher Q")
for i, (a, c, tq) in enumerate(zip(acts[0], scores[0], teacher_q)):
    print(f"  {i}   [{a[0]:+.3f}, {a[1]:+.3f}]   {c:+.4f}   {tq:+.4f}")

# hi_act repeats the same draw when handed the same generator state.
action, k, _ = inf.hi_act(policy, state, np.random.default_rng(0))
print(f"critic picks #{k}: {np.round(action, 3)}; teacher's value net would pick #{int(np.argmax(teacher_q))}")

# The teacher denoises n candidate plans over T steps and keeps the best by Q.
n_t = cfg.planner.n_candidates_eval
cands, best = plan(planner, state.astype(np.float32), n_t, np.random.default_rng(1))
print(f"teacher (T={cfg.planner.T}, n={n_t}) picks {np.round(best, 3)}, "
      f"Q {max(q for _, q in cands):+.4f}")

# Decisions per second on one thread, on the bench's probe states.
states = pipeline.probe_states(cfg)
hi = inf.measure_frequency(lambda s: inf.hi_act(policy, s, rng)[0], states, reps=2000)
tr = inf.measure_frequency(lambda s: plan(planner, s.astype(np.float32), n_t, rng)[1], states, warmup=3, reps=100)
print(f"\nHI(N=5) {hi.hz_single_stream:8.0f} Hz (p50 {hi.p50_us:7.1f} us)")
print(f"teacher {tr.hz_single_stream:8.1f} Hz (p50 {tr.p50_us:7.1f} us)")
print(f"speedup {hi.hz_single_stream / tr.hz_single_stream:.0f}x")
