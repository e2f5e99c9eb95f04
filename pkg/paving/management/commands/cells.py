from core.management.base import ApaverCommand


class Command(ApaverCommand):
    help = 'Dump the cell descriptors of the a-paving over Δ_N as JSON'
    command_name = 'cells'
