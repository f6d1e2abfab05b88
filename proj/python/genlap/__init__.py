"""Generated-distribution toolkit: beta/Kumaraswamy-generated families and the
beta-mixture Laplace law, with exact sampling, closed-form estimation and a
Monte-Carlo recovery harness. Everything here is re-exported from the native
module."""

from ._genlap import *  # noqa: F401,F403
from ._genlap import __doc__ as _native_doc  # noqa: F401
