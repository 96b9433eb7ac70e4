from ..bounds import bounds_cli as bounds_cli
from ..broadcast import broadcast_cli as broadcast_cli
from ..channelsim import channelsim_cli as channelsim_cli
from ..multishot import multishot_cli as multishot_cli
from ..subspace import subspace_cli as subspace_cli
from . import config_cli as config_cli
from . import version_cli as version_cli
