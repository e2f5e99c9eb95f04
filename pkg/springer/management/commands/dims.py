from core.management.base import ApaverCommand


class Command(ApaverCommand):
    help = 'Tabulate the fixed-point cell dimension of every vertex of Δ_N for γ(m, n)'
    command_name = 'dims'
