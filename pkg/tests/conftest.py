from fractions import Fraction

from hypothesis import strategies as st

from ncrewrite.arith import GaussianRational

small_fracs = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))
gaussians = st.builds(GaussianRational, small_fracs, small_fracs)
