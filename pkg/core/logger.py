import logging
import os
from logging.handlers import RotatingFileHandler

from core.config import settings


def get_logger(name="ELC"):
    logger = logging.getLogger(name)
    if not logger.handlers:
        logger.setLevel(settings.log_level.upper())

        # 格式化器：时间 - 级别 - 消息
        formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')

        # 文件滚动：每个文件10MB，保留5个备份；ELC_LOG_DIR 为空时只输出到控制台
        if settings.log_dir:
            os.makedirs(settings.log_dir, exist_ok=True)
            file_handler = RotatingFileHandler(
                os.path.join(settings.log_dir, "elc.log"),
                maxBytes=10*1024*1024,
                backupCount=5,
                encoding='utf-8'
            )
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        # 控制台走 stderr，stdout 留给命令输出
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)
        logger.propagate = False

    return logger

logger = get_logger()
