"""The editing algebra on a randomly initialized generator, no training needed.

Style mixing, level transfer and local editing are defined so that their
boundary cases are exact: mixing in no levels returns the content, a local
edit over an empty region changes nothing, and a full-frame edit at the first
layer reproduces the donor. This script checks those identities bitwise and
shows how far a local edit leaks outside its region.

    python3 demos/03_untrained_identities.py
"""

import torch

from ghfeat.editing import local_edit, local_edit_margin, mix_styles
from ghfeat.generator import GeneratorConfig, StyleGenerator
from ghfeat.styles import GHFeat

torch.manual_seed(0)
cfg = GeneratorConfig(channels='4:32,8:32,16:16,32:16')
gen = StyleGenerator(cfg).eval()
L = gen.num_layers

with torch.no_grad():
    a = gen.styles_from_z(gen.sample_z(1, 1))
    b = gen.styles_from_z(gen.sample_z(1, 2))
    img_a, img_b = gen.synthesize(a), gen.synthesize(b)
    fa, fb = GHFeat.from_styles(a), GHFeat.from_styles(b)

    none = gen.synthesize(mix_styles(fa, fb, set()).to_styles())
    every = gen.synthesize(mix_styles(fa, fb, set(range(1, L + 1)))
                           .to_styles())
    print('mix, no levels   == content:', torch.equal(none, img_a))
    print('mix, all levels  == style:  ', torch.equal(every, img_b))

    empty = local_edit(gen, a, b, 3, (8, 8, 0, 0))
    full = local_edit(gen, a, b, 1, (0, 0, 32, 32))
    print('empty region     == content:', torch.equal(empty, img_a))
    print('full frame, L1   == donor:  ', torch.equal(full, img_b))

    layer, region = 5, (12, 12, 8, 8)
    edited = local_edit(gen, a, b, layer, region)
    margin = local_edit_margin(cfg, layer)
    diff = (edited - img_a).abs()[0, 0]
    far = torch.ones_like(diff, dtype=torch.bool)
    top, left, h, w = region
    far[max(0, top - margin):top + h + margin,
        max(0, left - margin):left + w + margin] = False
    print(f'local edit at layer {layer}: margin {margin}px, max change '
          f'outside margin {float(diff[far].max()) if far.any() else 0:.2e}, '
          f'inside region {float(diff[top:top + h, left:left + w].max()):.3f}')
