"""
Diagonal Gaussian latents, their KL and the evidence bound
==========================================================

The habitual policy is a pair of diagonal Gaussians over a decision latent.
This script checks the closed-form KL against sampling, shows that the
training objective bounds the log evidence from below on a model where the
evidence is known exactly, and lets the adaptive KL weight react to a
KL that sits above and then below its target.

Run with ``python3 demos/02_latents_and_bounds.py`` (about ten seconds).
"""

import math

import numpy as np

from habi import latent
from habi.latent import DiagonalGaussian, KlWeightController, beta_update, kl_divergence

rng = np.random.default_rng(3)

# Closed form versus a Monte-Carlo average of log q(z) - log p(z), z ~ q.
print("KL(q || p) for random 8-d pairs")
print(f"{'closed':>10} {'sampled':>10} {'stderr':>8}")
for _ in range(5):
    q = DiagonalGaussian(rng.normal(size=8), rng.uniform(0.3, 2.0, 8))
    p = DiagonalGaussian(rng.normal(size=8), rng.uniform(0.3, 2.0, 8))
    est, se = latent.kl_monte_carlo(q, p, 200_000, rng)
    print(f"{float(kl_divergence(q, p)):10.4f} {est:10.4f} {se:8.4f}")

one = DiagonalGaussian(np.zeros(1), np.ones(1))
print("\nhand cases: shifted mean",
      float(kl_divergence(DiagonalGaussian(np.ones(1), np.ones(1)), one)),
      "| doubled scale", float(kl_divergence(DiagonalGaussian(np.zeros(1), np.full(1, 2.0)), one)),
      f"(log 0.5 + 1.5 = {math.log(0.5) + 1.5:.5f})")

# A linear-Gaussian model has an exact log evidence, so the bound can be seen.
prior = DiagonalGaussian(np.zeros(3), np.ones(3))
model = latent.LinearGaussianModel(np.diag([1.5, 0.7, 2.0]), np.zeros(3), 0.5, rng.normal(size=3))
exact = model.exact_log_evidence(prior)
mean, cov = model.exact_posterior_moments(prior)
print(f"\nexact log evidence {exact:.4f}")
for label, q in [("exact posterior", DiagonalGaussian(mean, np.sqrt(np.diag(cov)))),
                 ("prior as q", prior),
                 ("shifted by 1", DiagonalGaussian(mean + 1.0, np.sqrt(np.diag(cov))))]:
    chk = latent.elbo_bound_check(model, q, prior, 50_000, rng)
    print(f"  {label:16s} elbo {chk.elbo:9.4f} +- {chk.elbo_stderr:.4f}")

# The KL weight moves by lr_beta in log space per decade of mismatch.
ctrl = KlWeightController(target_kl=1.0, lr_beta=0.01)
print("\nbeta while the observed KL sits at 10, then at 0.1")
for step, kl in enumerate([10.0] * 300 + [0.1] * 900, start=1):
    ctrl = ctrl.smooth(kl)
    ctrl = beta_update(ctrl, ctrl.smoothed_kl)
    if step % 150 == 0:
        print(f"  step {step:3d}: smoothed KL {ctrl.smoothed_kl:6.3f}, beta {ctrl.beta:.4f}")
