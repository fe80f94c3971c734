"""
The point-mass maze and its offline data
========================================

A tour of the environment every other stage is built on: the medium maze,
one scripted-expert episode drawn through it, the offline dataset made of
such episodes and the returns-to-go the teacher's value net regresses on.

Run with ``python3 demos/01_maze_and_data.py`` (a few seconds).
"""

import numpy as np

from habi import envs
from habi.data import generate_offline_dataset, run_episodes

# The maze lives in the unit square. Walls are boxes, the state is
# (x, y, vx, vy) and an action is a 2-d acceleration in [-1, 1]^2.
env = envs.make_env("medium")
print(f"maze {env.name}: state dim {env.state_dim}, action dim {env.action_dim}, "
      f"{len(env.boxes)} wall boxes, horizon {env.max_steps}, gamma {env.gamma}")

# One episode of the noise-free scripted expert, drawn on top of the layout.
expert = envs.make_expert(env)
rng = np.random.default_rng(0)
start = env.start_states(1, rng)
returns, lengths, success, traj = run_episodes(env, expert.act_batch, start, rng, record=True)
path = np.array([t[0] for t in traj[0]] + [traj[0][-1][3]])
print(f"\nexpert episode: {lengths[0]} steps, reached goal: {bool(success[0])}")
print(envs.render_ascii(env.layout, path, width=36))

# Random actions never pass through a wall: each move is split per axis and
# stopped at the first face it meets.
s = env.sample_free_states(2000, rng)
for _ in range(50):
    s, _, _ = env.step_batch(s, env.random_actions(len(s), rng))
inside = envs.point_in_boxes(s[:, :2], env.layout.boxes(envs.WALL_HALF_THICKNESS - 1e-9))
print(f"\n2000 random walkers after 50 steps: {int(np.sum(inside))} inside a wall")

# The teacher imitates noisy-expert data; its value net learns from a
# mixture of expert and random behaviour.
ds = generate_offline_dataset(env, "noisy-expert", 40, seed=1)
print(f"\nnoisy-expert data: {len(ds)} transitions over {ds.n_episodes} episodes, "
      f"success rate {ds.success_rate():.2f}")

# Returns-to-go satisfy R_t = r_t + gamma R_{t+1} inside an episode and R_t = r_t at its end.
R, r = ds.returns_to_go, ds.rewards
nonterm = np.flatnonzero(~ds.terminals)
gap = np.max(np.abs(R[nonterm] - (r[nonterm] + env.gamma * R[nonterm + 1])))
print(f"largest violation of the returns-to-go recursion: {gap:.1e}")
first = slice(ds.episode_starts[0], ds.episode_starts[1])
print(f"returns-to-go along the first episode ({first.stop - first.start} steps, every 5th):")
print(np.round(R[first][::5], 3))
