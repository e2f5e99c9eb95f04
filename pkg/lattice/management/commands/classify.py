from core.management.base import ApaverCommand


class Command(ApaverCommand):
    help = 'Print the type, region and orbit windows of every vertex of Δ_N relative to a'
    command_name = 'classify'
