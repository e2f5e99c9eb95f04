from core.management.base import ApaverCommand


class Command(ApaverCommand):
    help = 'Write the filtration order on the vertices of Δ_N for level a'
    command_name = 'order'
