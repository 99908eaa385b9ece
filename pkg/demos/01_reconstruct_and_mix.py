"""Reconstruction and level-wise style mixing with a trained encoder.

Each test digit is encoded into one style code per level, re-rendered by the
frozen generator, and then recombined with a second digit: the fine levels
(1-4) come from the style image, the coarse ones from the content image. The
grid written to demos/out/mix.png has the content digits down the first
column, the style digits along the first row, and the mixtures in between.

    python3 demos/01_reconstruct_and_mix.py
"""

import os

import numpy as np

from _common import OUT, encoder, load_run
from ghfeat.editing import Editor, transfer_levels
from ghfeat.imaging import save_grid
from ghfeat.metrics import mse, ssim
from ghfeat.pipeline import encode_fn

config, generator, y_avg, split, run = load_run()
editor = Editor(generator, encode_fn(encoder(run, generator)), y_avg)

test = split.test.pixels
recon = editor.reconstruct(test[:200]).numpy()
print(f'reconstruction on 200 held-out digits: '
      f'mse {mse(recon, test[:200]):.4f}  ssim {ssim(recon, test[:200]):.3f}')
save_grid(os.path.join(OUT, 'reconstruct.png'),
          [list(test[:10]), list(recon[:10])], scale=3)

# what the two halves of the hierarchy carry
content, style = test[10:15], test[20:25]
fine = transfer_levels(generator.num_layers, 0.5)
print('levels taken from the style image:', sorted(fine))
rows = [[None] + list(style)]
for c in content:
    mixed = editor.mix(np.repeat(c[None], len(style), 0), style, fine)
    rows.append([c] + list(mixed.numpy()))
save_grid(os.path.join(OUT, 'mix.png'), rows, scale=3)
print('wrote', os.path.join(OUT, 'reconstruct.png'), 'and',
      os.path.join(OUT, 'mix.png'))
