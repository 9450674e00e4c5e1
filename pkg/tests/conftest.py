# encoding: utf-8
from __future__ import print_function

import pytest

from hypothesis import settings

from causalkg.fixtures import collision_network, collision_roles
from causalkg.utils.static import tests

settings.register_profile('causalkg', max_examples=100, deadline=None)
settings.load_profile('causalkg')

@pytest.fixture(scope='session')
def goldens():
    return tests.json('goldens.json')

@pytest.fixture(scope='session')
def collision():
    return collision_network()

@pytest.fixture(scope='session')
def roles():
    return collision_roles()

@pytest.fixture
def example_dir(tmp_path):
    """ A scratch directory holding the collision example’s files """
    from causalkg.fixtures import write_example
    write_example('collision', str(tmp_path))
    return tmp_path
