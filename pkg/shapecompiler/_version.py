# Static version information. Release tags follow vMAJOR.MINOR[.REVISION].

version_version = '0.3.0'
version_full = 'unknown'


def get_versions(default={}, verbose=False):
    return {'version': version_version, 'full': version_full}
