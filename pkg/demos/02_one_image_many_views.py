"""One image, increasing numbers of views: reconstruction against certificate.

Draws one sparse image per prior on a 32x32 disk and, for each view count,
reconstructs it and runs the uniqueness test. The two columns should switch
from failure to success at the same view count; the certificate never needs
to solve the reconstruction problem.

    python demos/02_one_image_many_views.py
"""
from ctuniq import certificates as cert
from ctuniq.geometry import build_disk_mask, system_matrix
from ctuniq.gradient import build_aniso, build_iso
from ctuniq.images import GeneratorConfig, generate, k_from_kappa
from ctuniq.recon import DEFAULT_EPSILON, decide_recovery, reconstruct

mask = build_disk_mask(32)
aniso = build_aniso(mask)
cases = [("L1", "spikes", 0.3, aniso), ("ATV", "altproj-aniso", 0.7, aniso),
         ("ITV", "altproj-iso", 0.3, build_iso(mask))]

for prior, image_class, kappa, op in cases:
    k = k_from_kappa(kappa, mask.n)
    x = generate(mask, GeneratorConfig(image_class, k, seed=1), aniso).values
    print(f"\n{prior} prior, {image_class} image, kappa={kappa} (k={k})")
    print(" N_v  rel. error  recovered  verdict        t*")
    for nv in range(3, 14, 2):
        A = system_matrix(32, nv, mask=mask)
        r = reconstruct(prior, A, A @ x, op)
        d = decide_recovery(r.x, x, DEFAULT_EPSILON[prior])
        v = cert.test_uniqueness(prior, A, x, op)
        t = "-" if v.t_star is None else f"{v.t_star:.4f}"
        print(f" {nv:3d}  {d.relative_error:10.2e}  {str(d.recovered):9s}  "
              f"{v.verdict:13s}  {t}")
