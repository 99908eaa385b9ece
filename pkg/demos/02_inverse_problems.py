"""Inpainting and 4x super-resolution by descending on the style codes.

The encoder gives the starting point; plain gradient descent on the full
style stack then fits the degraded observation through the frozen generator.
The generator weights never move. Printed numbers are mean squared errors
against the clean digit, split into the pixels the solver saw and those it
had to invent.

    python3 demos/02_inverse_problems.py
"""

import os

import numpy as np
import torch

from _common import OUT, encoder, load_run
from ghfeat.imaging import save_grid
from ghfeat.inverse import DegradationOp, degrade, inpaint, superres, upcast
from ghfeat.pipeline import encode_fn

config, generator, y_avg, split, run = load_run()
encode = encode_fn(encoder(run, generator))
steps, lr = config.eval.inverse_steps, config.eval.inverse_step_size
truth = torch.as_tensor(split.test.pixels[:8])

mask = np.ones((32, 32), np.float32)
mask[10:22, 8:24] = 0
hidden = torch.from_numpy(mask == 0)
observed = truth * torch.from_numpy(mask)
filled, res = inpaint(generator, encode, y_avg, observed, mask, steps=steps,
                      step_size=lr)
err = ((filled - truth)[:, 0] ** 2)
print(f'inpaint: observed-pixel loss {res.trajectory[0]:.4f} -> '
      f'{res.best_trajectory[-1]:.4f}; hidden-region mse '
      f'{float(err[:, hidden].mean()):.4f}')

op = DegradationOp('downsample', factor=4)
low = degrade(truth, op)
sharp, res = superres(generator, encode, y_avg, low, 4, steps=steps,
                      step_size=lr)
print(f'super-resolution x4: low-res loss {res.trajectory[0]:.4f} -> '
      f'{res.best_trajectory[-1]:.4f}; full-res mse '
      f'{float(((sharp - truth) ** 2).mean()):.4f}')

save_grid(os.path.join(OUT, 'inverse.png'),
          [list(truth), list(observed), list(filled),
           list(upcast(low, op)), list(sharp)], scale=3)
print('wrote', os.path.join(OUT, 'inverse.png'),
      '(rows: truth, masked, inpainted, blocky x4, super-resolved)')
