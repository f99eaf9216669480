from orderproc.main import OrderProc
from orderproc.order_process import OrderProcess, validate
from orderproc.configs import *
