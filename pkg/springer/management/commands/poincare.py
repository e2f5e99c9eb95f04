from core.management.base import ApaverCommand


class Command(ApaverCommand):
    help = 'Print the Poincaré coefficients of the fixed points over Δ_N for γ(m, n)'
    command_name = 'poincare'
